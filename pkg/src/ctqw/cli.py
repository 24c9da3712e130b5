"""Command-line front end.

Subcommands: ``graph`` (serialize a family instance plus its connectivity
report), ``efficiency`` (transport-efficiency report for one initial
state), ``sweep`` (emit the named reference datasets as CSV or JSON).

Output is deterministic: rows are sorted and every number is printed with
12 significant digits. The environment variable CTQW_TOL overrides the
linear-dependence tolerance of the subspace construction.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict
from fractions import Fraction

from .connectivity import connectivity_report, correlation_table
from .graphs import (
    Complete,
    CompleteBipartite,
    FamilySpec,
    JoinedComplete,
    PaleyPrime,
    Petersen,
    Rook,
    Simplex,
    build,
    family_name,
    graph_to_json,
)
from .transport import (
    Explicit,
    Localized,
    Superposition,
    class_representative,
    class_uniform_state,
    class_vertices,
    efficiency_closed_form,
    efficiency_report,
)

_LAMBDA_TOL = 1e-9
_DYNAMIC_TOL = 1e-2


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _jnum(x: float | None) -> float | None:
    return None if x is None else float(format(x, ".12g"))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dep_tol() -> float:
    return float(os.environ.get("CTQW_TOL", "1e-10"))


# --- family argument plumbing ---------------------------------------------------


_FAMILY_ARGS: dict[str, tuple[tuple[str, str], ...]] = {
    "complete": (("n", "vertex count"),),
    "cbg": (("n1", "trap-side partition size"), ("n2", "opposite partition size")),
    "paley": (("p", "prime modulus, p = 1 (mod 4)"),),
    "petersen": (),
    "rook": (("n", "board side length"),),
    "jcg": (("half", "vertices in each joined complete graph"),),
    "simplex": (("m", "vertices per block (m+1 blocks)"),),
}


def _add_family_parsers(subparsers, configure) -> None:
    for fam, params in _FAMILY_ARGS.items():
        sub = subparsers.add_parser(fam)
        for name, help_text in params:
            sub.add_argument(f"--{name}", type=int, required=True, help=help_text)
        sub.set_defaults(family=fam)
        configure(sub)


def _spec_from_args(args) -> FamilySpec:
    fam = args.family
    if fam == "complete":
        return Complete(args.n)
    if fam == "cbg":
        return CompleteBipartite(args.n1, args.n2)
    if fam == "paley":
        return PaleyPrime(args.p)
    if fam == "petersen":
        return Petersen()
    if fam == "rook":
        return Rook(args.n)
    if fam == "jcg":
        return JoinedComplete(args.half)
    return Simplex(args.m)


def _spec_params(spec: FamilySpec) -> dict:
    return asdict(spec)


# --- state parsing ----------------------------------------------------------------


def _vertex_or_class(g, token: str) -> tuple[int, str | None]:
    if token.lstrip("-").isdigit():
        v = int(token)
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        label = g.classes[v] if g.classes else None
        return v, label
    return class_representative(g, token), token


def _parse_state(g, state_str: str, theta: float):
    """Resolve a --state expression to (initial state, class1, class2)."""
    kind, sep, rest = state_str.partition(":")
    if not sep:
        raise ValueError(f"malformed state {state_str!r}, expected kind:value")
    if kind == "class" or kind == "vertex":
        v, label = _vertex_or_class(g, rest)
        return Localized(v), label, None
    if kind == "super":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError("super state needs exactly two vertices or classes")
        v1, label1 = _vertex_or_class(g, parts[0])
        v2, label2 = _vertex_or_class(g, parts[1])
        if v1 == v2:
            if label1 is not None and len(class_vertices(g, label1)) > 1:
                v2 = class_vertices(g, label1)[1]
            else:
                raise ValueError("super state needs two distinct vertices")
        return Superposition(v1, v2, theta), label1, label2
    if kind == "uniform":
        return Explicit(class_uniform_state(g, rest)), None, None
    raise ValueError(f"unknown state kind {kind!r}")


# --- subcommand handlers ------------------------------------------------------------


def _cmd_graph(args) -> int:
    spec = _spec_from_args(args)
    g = build(spec)
    report = connectivity_report(g)
    payload = {
        "family": family_name(spec),
        "params": _spec_params(spec),
        "graph": graph_to_json(g),
        "connectivity": {
            "min_degree": report.min_degree,
            "vertex": report.vertex_conn,
            "edge": report.edge_conn,
            "algebraic": _jnum(report.algebraic_conn),
            "normalized_algebraic": _jnum(report.normalized_algebraic_conn),
        },
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_efficiency(args) -> int:
    spec = _spec_from_args(args)
    g = build(spec)
    psi0, class1, class2 = _parse_state(g, args.state, args.theta)
    report = efficiency_report(
        spec,
        psi0,
        class1=class1,
        class2=class2,
        theta=args.theta,
        kappa=args.kappa,
        oracle=args.oracle,
        dt=args.dt,
        t_max=args.t_max,
        tol=_dep_tol(),
    )
    payload = {
        "family": family_name(spec),
        "params": _spec_params(spec),
        "state": args.state,
        "theta": _jnum(args.theta),
        "kappa": _jnum(args.kappa),
        "m": report.m,
        "eta": {
            "subspace": _jnum(report.eta_subspace),
            "closed_form": _jnum(report.eta_closed_form),
            "lambda": _jnum(report.eta_lambda),
            "dynamic_absorbed": _jnum(report.eta_dynamic),
            "dynamic_survival": _jnum(report.eta_survival),
        },
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if args.oracle:
        assert report.eta_lambda is not None
        assert report.eta_dynamic is not None and report.eta_survival is not None
        agree = (
            abs(report.eta_lambda - report.eta_subspace) <= _LAMBDA_TOL
            and abs(report.eta_dynamic - report.eta_subspace) <= _DYNAMIC_TOL
            and abs(report.eta_survival - report.eta_subspace) <= _DYNAMIC_TOL
        )
        if not agree:
            print("error: oracle routes disagree beyond tolerance", file=sys.stderr)
            return 3
    return 0


# --- sweep datasets ---------------------------------------------------------------

_FIG3_ALPHAS = (
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
)
_FIG7_BLOCK_RANGE = range(3, 11)
_FIG7_PAIRS = (("a", "b"), ("b", "cd"), ("b", "e"), ("b", "f"))
_THETAS = (0.0, math.pi / 2, math.pi)


def _dataset_fig3() -> tuple[list[str], list[list]]:
    header = ["alpha", "N", "eta1", "eta2", "eta_s"]
    rows = []
    for alpha in _FIG3_ALPHAS:
        for n in range(8, 49):
            if (alpha * n).denominator != 1:
                continue
            n1 = int(alpha * n)
            n2 = n - n1
            if n1 < 2 or n2 < 1:
                continue
            rows.append(
                [
                    float(alpha),
                    n,
                    1.0 / (n1 - 1),
                    1.0 / n2,
                    (n - 1) / (2.0 * (n1 - 1) * n2),
                ]
            )
    rows.sort(key=lambda r: (r[0], r[1]))
    return header, rows


def _dataset_fig7() -> tuple[list[str], list[list]]:
    header = ["M", "pair", "theta", "eta_s"]
    rows = []
    for m in _FIG7_BLOCK_RANGE:
        for c1, c2 in _FIG7_PAIRS:
            for theta in _THETAS:
                eta = efficiency_closed_form(Simplex(m), c1, c2, theta)
                rows.append([m, f"{c1}+{c2}", theta, eta])
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    return header, rows


_FIG8_INSTANCES: list[tuple[FamilySpec, tuple[str, ...]]] = (
    [(Complete(n), ("a",)) for n in (6, 8, 10, 12)]
    + [(CompleteBipartite(2 * n // 3, n // 3), ("b", "a")) for n in (12, 18, 24, 30)]
    + [(PaleyPrime(p), ("a", "b")) for p in (13, 17, 29)]
    + [(JoinedComplete(n // 2), ("a", "b1", "b2", "c")) for n in (12, 18, 24, 30)]
    + [(Simplex(m), ("a", "b", "cd", "e", "f")) for m in (3, 4, 5, 6)]
)

_FIG8_NOTE = (
    "order-25 strongly regular instance omitted: only prime-order Paley "
    "moduli are constructed"
)


def _dataset_fig8() -> tuple[list[str], list[list]]:
    header = ["family", "N", "class", "eta", "vertex_conn", "edge_conn", "algebraic_conn"]
    points = [
        (spec, label) for spec, labels in _FIG8_INSTANCES for label in labels
    ]
    rows = [
        [r.family, r.n, r.vertex_class, r.eta, r.vertex_conn, r.edge_conn, r.algebraic_conn]
        for r in correlation_table(points)
    ]
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    return header, rows


_TABLE1_INSTANCES: tuple[tuple[FamilySpec, str, str, str], ...] = (
    (Complete(6), "N-1", "N-1", "N"),
    (CompleteBipartite(8, 4), "min(N1,N2)", "min(N1,N2)", "min(N1,N2)"),
    (PaleyPrime(13), "(N-1)/2", "(N-1)/2", "(N-sqrt(N))/2"),
    (PaleyPrime(17), "(N-1)/2", "(N-1)/2", "(N-sqrt(N))/2"),
    (JoinedComplete(6), "N/2-1", "1", "(N+4-sqrt(N*(N+8)-16))/4"),
    (Simplex(3), "M", "M", "1"),
    (Simplex(5), "M", "M", "1"),
)


def _table1_formula_value(spec: FamilySpec) -> float:
    if isinstance(spec, Complete):
        return float(spec.n)
    if isinstance(spec, CompleteBipartite):
        return float(min(spec.n1, spec.n2))
    if isinstance(spec, PaleyPrime):
        return (spec.p - math.sqrt(spec.p)) / 2.0
    if isinstance(spec, JoinedComplete):
        n = 2 * spec.half
        return (n + 4 - math.sqrt(n * (n + 8) - 16)) / 4.0
    return 1.0


def _dataset_table1() -> tuple[list[str], list[list]]:
    header = [
        "family",
        "N",
        "min_degree",
        "vertex_conn",
        "edge_conn",
        "algebraic_conn",
        "formula_min_degree",
        "formula_conn",
        "formula_algebraic",
        "formula_algebraic_value",
    ]
    rows = []
    for spec, f_delta, f_conn, f_alg in _TABLE1_INSTANCES:
        g = build(spec)
        rep = connectivity_report(g)
        rows.append(
            [
                family_name(spec),
                g.n,
                rep.min_degree,
                rep.vertex_conn,
                rep.edge_conn,
                rep.algebraic_conn,
                f_delta,
                f_conn,
                f_alg,
                _table1_formula_value(spec),
            ]
        )
    rows.sort(key=lambda r: (r[0], r[1]))
    return header, rows


_DATASETS = {
    "fig3": (_dataset_fig3, "bipartite efficiency against graph order"),
    "fig7": (_dataset_fig7, "simplex two-vertex superposition efficiencies"),
    "fig8": (_dataset_fig8, "efficiency against connectivity measures"),
    "table1": (_dataset_table1, "connectivity summary per family"),
}


def _cmd_sweep(args) -> int:
    builder, description = _DATASETS[args.dataset]
    header, rows = builder()
    meta = {"dataset": args.dataset, "description": description}
    if args.dataset == "fig3":
        meta["note"] = "alpha grid and N range are reproduction defaults"
    if args.dataset == "fig7":
        meta["note"] = "theta grid {0, pi/2, pi} is a reproduction default"
    if args.dataset == "fig8":
        meta["note"] = _FIG8_NOTE
        print(f"note: {_FIG8_NOTE}", file=sys.stderr)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])
        _emit(buf.getvalue(), args.out)
    else:
        payload = {
            "meta": meta,
            "rows": [
                {k: (_jnum(x) if isinstance(x, float) else x) for k, x in zip(header, row)}
                for row in rows
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


# --- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctqw",
        description="Quantum-walk transport efficiency on structured graph families",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    graph_cmd = commands.add_parser("graph", help="serialize a graph instance")
    graph_families = graph_cmd.add_subparsers(dest="family", required=True)

    def configure_graph(sub):
        sub.add_argument("--out", default=None, help="output path (default stdout)")
        sub.set_defaults(handler=_cmd_graph)

    _add_family_parsers(graph_families, configure_graph)

    eff_cmd = commands.add_parser("efficiency", help="transport-efficiency report")
    eff_families = eff_cmd.add_subparsers(dest="family", required=True)

    def configure_eff(sub):
        sub.add_argument(
            "--state",
            required=True,
            help="class:<label> | vertex:<i> | super:<x>,<y> | uniform:<label>",
        )
        sub.add_argument("--theta", type=float, default=0.0, help="phase in radians")
        sub.add_argument("--kappa", type=float, default=1.0, help="trapping rate")
        sub.add_argument(
            "--oracle",
            action="store_true",
            help="also run the eigenvector and dynamical routes",
        )
        sub.add_argument("--dt", type=float, default=1e-3)
        sub.add_argument("--t-max", type=float, default=500.0, dest="t_max")
        sub.add_argument("--out", default=None, help="output path (default stdout)")
        sub.set_defaults(handler=_cmd_efficiency)

    _add_family_parsers(eff_families, configure_eff)

    sweep_cmd = commands.add_parser("sweep", help="emit a reference dataset")
    sweep_cmd.add_argument("dataset", choices=sorted(_DATASETS))
    sweep_cmd.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_cmd.add_argument("--out", default=None, help="output path (default stdout)")
    sweep_cmd.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
