import json
import math

import pytest

from ctqw.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_graph_simplex(capsys):
    code, out, _ = run_cli(capsys, "graph", "simplex", "--m", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"]["n"] == 30
    degrees = {}
    for i, j in payload["graph"]["edges"]:
        degrees[i] = degrees.get(i, 0) + 1
        degrees[j] = degrees.get(j, 0) + 1
    assert all(d == 5 for d in degrees.values())
    assert payload["connectivity"]["algebraic"] == pytest.approx(1.0, abs=1e-9)


def test_graph_cbg_connectivity(capsys):
    code, out, _ = run_cli(capsys, "graph", "cbg", "--n1", "8", "--n2", "4")
    assert code == 0
    conn = json.loads(out)["connectivity"]
    assert conn["vertex"] == conn["edge"] == 4
    assert conn["algebraic"] == pytest.approx(4.0, abs=1e-9)


def test_graph_rejects_invalid_parameters(capsys):
    code, _, err = run_cli(capsys, "graph", "paley", "--p", "9")
    assert code == 2
    assert "prime" in err


def test_graph_edges_sorted(capsys):
    _, out, _ = run_cli(capsys, "graph", "petersen")
    edges = [tuple(e) for e in json.loads(out)["graph"]["edges"]]
    assert edges == sorted(edges)


def test_efficiency_jcg_class_state(capsys):
    code, out, _ = run_cli(
        capsys, "efficiency", "jcg", "--half", "6", "--state", "class:b1"
    )
    assert code == 0
    eta = json.loads(out)["eta"]
    assert eta["subspace"] == pytest.approx(29 / 49, abs=1e-9)
    assert eta["closed_form"] == pytest.approx(29 / 49, abs=1e-9)
    assert eta["lambda"] is None


def test_efficiency_simplex_superposition(capsys):
    code, out, _ = run_cli(
        capsys,
        "efficiency",
        "simplex",
        "--m",
        "5",
        "--state",
        "super:b,e",
        "--theta",
        "0",
    )
    assert code == 0
    eta = json.loads(out)["eta"]
    assert eta["subspace"] == pytest.approx(0.465, abs=1e-9)
    assert eta["closed_form"] == pytest.approx(0.465, abs=1e-9)


def test_efficiency_with_oracle(capsys):
    code, out, _ = run_cli(
        capsys,
        "efficiency",
        "complete",
        "--n",
        "4",
        "--state",
        "class:a",
        "--oracle",
        "--t-max",
        "200",
    )
    assert code == 0
    eta = json.loads(out)["eta"]
    for route in ("subspace", "closed_form", "lambda", "dynamic_absorbed", "dynamic_survival"):
        assert eta[route] == pytest.approx(1 / 3, abs=1e-2)


def test_efficiency_uncovered_closed_form_still_succeeds(capsys):
    code, out, _ = run_cli(
        capsys, "efficiency", "complete", "--n", "4", "--state", "vertex:0"
    )
    assert code == 0
    eta = json.loads(out)["eta"]
    assert eta["closed_form"] is None
    assert eta["subspace"] == pytest.approx(1.0, abs=1e-12)


def test_efficiency_vertex_state_gets_class_formula(capsys):
    code, out, _ = run_cli(
        capsys, "efficiency", "cbg", "--n1", "8", "--n2", "4", "--state", "vertex:3"
    )
    assert code == 0
    eta = json.loads(out)["eta"]
    assert eta["closed_form"] == pytest.approx(1 / 7, abs=1e-12)


def test_sweep_fig3_row(capsys):
    code, out, _ = run_cli(capsys, "sweep", "fig3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "alpha,N,eta1,eta2,eta_s"
    target = None
    for line in lines[1:]:
        fields = line.split(",")
        if abs(float(fields[0]) - 2 / 3) < 1e-9 and fields[1] == "12":
            target = fields
    assert target is not None
    assert float(target[2]) == pytest.approx(1 / 7, abs=1e-9)
    assert float(target[3]) == pytest.approx(1 / 4, abs=1e-9)
    assert float(target[4]) == pytest.approx(11 / 56, abs=1e-9)


def test_sweep_fig7_row(capsys):
    code, out, _ = run_cli(capsys, "sweep", "fig7")
    assert code == 0
    hit = False
    for line in out.splitlines()[1:]:
        m, pair, theta, eta = line.split(",")
        if m == "5" and pair == "b+cd" and abs(float(theta) - math.pi) < 1e-9:
            assert float(eta) == pytest.approx(0.5, abs=1e-9)
            hit = True
    assert hit


def test_sweep_table1_simplex_row(capsys):
    code, out, _ = run_cli(capsys, "sweep", "table1")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    simplex_rows = [r for r in rows if r[0] == "simplex"]
    assert len(simplex_rows) == 2
    for r in simplex_rows:
        assert float(r[5]) == pytest.approx(1.0, abs=1e-9)


def test_sweep_fig8_emits_note_and_rows(capsys):
    code, out, err = run_cli(capsys, "sweep", "fig8")
    assert code == 0
    assert "omitted" in err
    header = out.splitlines()[0]
    assert header == "family,N,class,eta,vertex_conn,edge_conn,algebraic_conn"
    assert len(out.splitlines()) > 20


def test_sweep_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "sweep", "fig7")
    _, second, _ = run_cli(capsys, "sweep", "fig7")
    assert first == second


def test_sweep_json_format(capsys):
    code, out, _ = run_cli(capsys, "sweep", "table1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["dataset"] == "table1"
    assert any(row["family"] == "paley" for row in payload["rows"])


def test_sweep_rejects_unknown_dataset(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["sweep", "fig9"])
    assert excinfo.value.code == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out, _ = run_cli(capsys, "sweep", "table1", "--out", str(path))
    assert code == 0
    assert out == ""
    text = path.read_text(encoding="utf-8")
    assert text.startswith("family,")
    assert "\r" not in text


def test_dependency_tolerance_env(capsys, monkeypatch):
    monkeypatch.setenv("CTQW_TOL", "1e-8")
    code, out, _ = run_cli(
        capsys, "efficiency", "petersen", "--state", "class:a"
    )
    assert code == 0
    assert json.loads(out)["eta"]["subspace"] == pytest.approx(1 / 3, abs=1e-9)


def test_oracle_disagreement_exits_3(capsys):
    # a horizon far too short for the dynamics to converge trips the
    # numeric-agreement gate
    code, out, err = run_cli(
        capsys,
        "efficiency",
        "jcg",
        "--half",
        "6",
        "--state",
        "class:b1",
        "--oracle",
        "--t-max",
        "0.5",
    )
    assert code == 3
    assert "disagree" in err
    assert json.loads(out)["eta"]["subspace"] == pytest.approx(29 / 49, abs=1e-9)


def test_malformed_state_is_invalid_parameter(capsys):
    code, _, err = run_cli(
        capsys, "efficiency", "petersen", "--state", "nonsense"
    )
    assert code == 2
    assert "state" in err
