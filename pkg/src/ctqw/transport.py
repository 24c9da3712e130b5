"""Transport efficiency toward a single absorbing trap.

The efficiency eta is the probability that a walker started in ``psi0`` is
eventually absorbed at the trap vertex w. Four independent routes compute
it:

* subspace overlap: eta = sum_k |<e_k|psi0>|^2 over the iterative basis of
  the trap-seeded invariant subspace (:func:`efficiency_subspace`);
* per-family analytic formulas (:func:`efficiency_closed_form`);
* overlap with the span of Laplacian eigenvectors that see the trap
  (:func:`lambda_subspace` / :func:`efficiency_lambda`);
* direct integration of the lossy dynamics (:func:`efficiency_dynamic`),
  reporting both the integrated trapping probability and the lost norm.

All four must agree; the test suite holds them to tight tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .graphs import (
    Complete,
    CompleteBipartite,
    FamilySpec,
    Graph,
    JoinedComplete,
    PaleyPrime,
    Petersen,
    Rook,
    Simplex,
    build,
    laplacian,
    srg_parameters,
)
from .numerics import evolve_trapped, sym_eig
from .reduction import SubspaceBasis, _fix_sign, krylov_basis


class UnsupportedCaseError(ValueError):
    """The requested family/class/superposition combination has no analytic
    formula."""


# --- initial states ---------------------------------------------------------------


@dataclass(frozen=True)
class Localized:
    v: int


@dataclass(frozen=True)
class Superposition:
    """(|v1> + e^{i theta} |v2>) / sqrt(2)."""

    v1: int
    v2: int
    theta: float = 0.0

    def __post_init__(self) -> None:
        if self.v1 == self.v2:
            raise ValueError("superposition needs two distinct vertices")


@dataclass(frozen=True, eq=False)
class Explicit:
    state: np.ndarray


InitialState = Union[Localized, Superposition, Explicit]


@dataclass(frozen=True)
class TrapSpec:
    w: int
    kappa: float

    def __post_init__(self) -> None:
        if self.kappa < 0:
            raise ValueError("kappa must be non-negative")


def initial_state_vector(state: InitialState, n: int) -> np.ndarray:
    """Materialize an initial-state description as a unit complex vector."""
    psi = np.zeros(n, dtype=complex)
    if isinstance(state, Localized):
        if not 0 <= state.v < n:
            raise ValueError(f"vertex {state.v} out of range")
        psi[state.v] = 1.0
    elif isinstance(state, Superposition):
        if not (0 <= state.v1 < n and 0 <= state.v2 < n):
            raise ValueError("superposition vertex out of range")
        psi[state.v1] = 1.0 / math.sqrt(2.0)
        psi[state.v2] = np.exp(1j * state.theta) / math.sqrt(2.0)
    elif isinstance(state, Explicit):
        psi = np.asarray(state.state, dtype=complex).reshape(n).copy()
        if abs(np.linalg.norm(psi) - 1.0) > 1e-9:
            raise ValueError("explicit state must be normalized")
    else:
        raise ValueError(f"unknown initial state {state!r}")
    return psi


def class_vertices(g: Graph, label: str) -> tuple[int, ...]:
    """Vertices carrying a class label; ``"cd"`` merges the two simplex
    classes that share all transport properties."""
    if label == "cd":
        merged = g.class_vertices("c") + g.class_vertices("d")
        vs = tuple(sorted(merged))
    else:
        vs = g.class_vertices(label)
    if not vs:
        raise ValueError(f"no vertices with class {label!r}")
    return vs


def class_representative(g: Graph, label: str) -> int:
    return class_vertices(g, label)[0]


def class_uniform_state(g: Graph, label: str) -> np.ndarray:
    """Equal real superposition of all vertices in a class."""
    vs = class_vertices(g, label)
    psi = np.zeros(g.n, dtype=complex)
    psi[list(vs)] = 1.0 / math.sqrt(len(vs))
    return psi


# --- the four routes ---------------------------------------------------------------


def efficiency_subspace(
    g: Graph, w: int, psi0: InitialState | np.ndarray, tol: float = 1e-10
) -> float:
    """Overlap of the initial state with the trap-seeded invariant subspace."""
    basis = krylov_basis(g, w, tol)
    psi = psi0 if isinstance(psi0, np.ndarray) else initial_state_vector(psi0, g.n)
    return basis.overlap(psi)


def lambda_subspace(
    g: Graph, w: int = 0, degeneracy_tol: float = 1e-8
) -> SubspaceBasis:
    """Span of the Laplacian eigenvectors with nonzero trap overlap.

    Eigenvalues are grouped when equal within `degeneracy_tol` (relative to
    the spectral range); from each group the normalized projection of |w>
    is kept whenever its norm exceeds `degeneracy_tol`. The remainder of a
    degenerate eigenspace is orthogonal to |w> by construction, so one
    vector per group suffices.
    """
    if not 0 <= w < g.n:
        raise ValueError(f"vertex {w} out of range")
    es = sym_eig(laplacian(g))
    spread = float(es.values[-1] - es.values[0])
    gap_tol = degeneracy_tol * max(1.0, spread)
    collected = []
    start = 0
    for stop in range(1, g.n + 1):
        if stop < g.n and es.values[stop] - es.values[stop - 1] <= gap_tol:
            continue
        block = es.vectors[:, start:stop]
        amps = block[w, :]
        weight = float(np.linalg.norm(amps))
        if weight > degeneracy_tol:
            collected.append(_fix_sign(block @ (amps / weight)))
        start = stop
    return SubspaceBasis(np.asarray(collected))


def efficiency_lambda(
    g: Graph,
    w: int,
    psi0: InitialState | np.ndarray,
    degeneracy_tol: float = 1e-8,
) -> float:
    """Overlap of the initial state with the trap-visible eigenvector span."""
    basis = lambda_subspace(g, w, degeneracy_tol)
    psi = psi0 if isinstance(psi0, np.ndarray) else initial_state_vector(psi0, g.n)
    return basis.overlap(psi)


def efficiency_dynamic(
    g: Graph,
    trap: TrapSpec,
    psi0: InitialState | np.ndarray,
    dt: float = 1e-3,
    t_max: float = 500.0,
    stop_tol: float | None = 1e-6,
) -> tuple[float, float]:
    """Brute-force oracle: integrate the lossy dynamics and report
    (integrated trapping probability, lost norm). Both converge to eta as
    t_max grows."""
    if trap.kappa <= 0:
        raise ValueError("dynamic efficiency needs kappa > 0")
    psi = psi0 if isinstance(psi0, np.ndarray) else initial_state_vector(psi0, g.n)
    ev = evolve_trapped(
        laplacian(g), trap.w, trap.kappa, psi, dt=dt, t_max=t_max, stop_tol=stop_tol
    )
    survival = float(np.linalg.norm(ev.psi) ** 2)
    return ev.absorbed, 1.0 - survival


SuperpositionMode = Literal["same-overlap", "disjoint-overlap"]


def superposition_rule(
    eta1: float, eta2: float, mode: SuperpositionMode, theta: float
) -> float:
    """Combine localized efficiencies into a two-vertex superposition one.

    "same-overlap" applies when both vertices have identical overlap with
    every basis vector (requires eta1 == eta2): eta_s = (1 + cos theta) * eta.
    "disjoint-overlap" applies when they overlap disjoint sets of basis
    vectors: eta_s = (eta1 + eta2) / 2, independent of theta.
    """
    if mode == "same-overlap":
        if abs(eta1 - eta2) > 1e-12:
            raise ValueError("same-overlap rule requires eta1 == eta2")
        return (1.0 + math.cos(theta)) * eta1
    if mode == "disjoint-overlap":
        return 0.5 * (eta1 + eta2)
    raise ValueError(f"unknown mode {mode!r}")


# --- analytic formulas ---------------------------------------------------------------


def _simplex_label(label: str) -> str:
    return "cd" if label in ("c", "d") else label


def _closed_form_localized(spec: FamilySpec, label: str) -> float:
    if isinstance(spec, Complete):
        if label == "a":
            return 1.0 / (spec.n - 1)
    elif isinstance(spec, CompleteBipartite):
        if label == "b" and spec.n1 >= 2:
            return 1.0 / (spec.n1 - 1)
        if label == "a":
            return 1.0 / spec.n2
    elif isinstance(spec, (PaleyPrime, Petersen, Rook)):
        params = srg_parameters(spec)
        assert params is not None
        if label == "a":
            return 1.0 / params.k
        if label == "b":
            return 1.0 / (params.n - params.k - 1)
    elif isinstance(spec, JoinedComplete):
        n = 2 * spec.half
        d = n * (n - 4) + 2
        if label == "a" and spec.half >= 3:
            return 2.0 * (n - 1) / d
        if label in ("b1", "b2"):
            return 0.5 + (n - 3) / d
        if label == "c":
            return 2.0 * (n - 3) / d
    elif isinstance(spec, Simplex):
        m = spec.m
        if m >= 3:
            label = _simplex_label(label)
            if label == "a":
                return (m * m - 2) / (m * m * (m - 1))
            if label == "b":
                return (m * m - 2 * m + 2) / (m * m)
            if label == "cd":
                return 2.0 / (m * m)
            if label == "e":
                return 1.0 / (m - 1)
            if label == "f":
                return (m * m - 2 * m + 4) / (m * m * (m - 1) * (m - 2))
    raise UnsupportedCaseError(
        f"no analytic efficiency for {spec!r} localized at class {label!r}"
    )


def _closed_form_pair(
    spec: FamilySpec, label1: str, label2: str, theta: float
) -> float:
    cos = math.cos(theta)
    pair = frozenset((label1, label2))
    if isinstance(spec, CompleteBipartite):
        n1, n2 = spec.n1, spec.n2
        n = n1 + n2
        if pair == frozenset(("a", "b")) and n1 >= 2:
            return (n - 1) / (2.0 * (n1 - 1) * n2)
    elif isinstance(spec, (PaleyPrime, Petersen, Rook)):
        params = srg_parameters(spec)
        assert params is not None
        if pair == frozenset(("a", "b")):
            return (params.n - 1) / (2.0 * params.k * (params.n - params.k - 1))
    elif isinstance(spec, JoinedComplete):
        n = 2 * spec.half
        d = n * (n - 4) + 2
        if pair in (frozenset(("a", "b1")), frozenset(("a", "b2"))) and spec.half >= 3:
            return (n - 2) * (n + 4 * (1 + cos)) / (4.0 * d)
        if pair == frozenset(("a", "c")) and spec.half >= 3:
            return 2.0 * (n - 2 - cos) / d
        if pair == frozenset(("b1", "b2")):
            return ((n - 2) * (n - (n - 4) * cos) - 4) / (2.0 * d)
        if pair in (frozenset(("b1", "c")), frozenset(("b2", "c"))):
            return (n * (n + 2) + 4 * (n - 4) * cos - 16) / (4.0 * d)
    elif isinstance(spec, Simplex):
        m = spec.m
        if m >= 3:
            pair = frozenset((_simplex_label(label1), _simplex_label(label2)))
            if pair == frozenset(("a", "b")):
                return (m * (m * m - 2 * m + 4) - 4 + 4 * (m - 1) * cos) / (
                    2.0 * m * m * (m - 1)
                )
            if pair == frozenset(("a", "cd")):
                return (m * m + 2 * m - 4 + 2 * (m - 2) * cos) / (2.0 * m * m * (m - 1))
            if pair == frozenset(("a", "e")):
                return 1.0 / m + 1.0 / (m * m)
            if pair == frozenset(("a", "f")):
                return (m * (m * m - m - 4) + 8 - 4 * (m - 2) * cos) / (
                    2.0 * m * m * (m - 1) * (m - 2)
                )
            if pair == frozenset(("b", "cd")):
                return (m * m - 2 * m + 4 - 2 * (m - 2) * cos) / (2.0 * m * m)
            if pair == frozenset(("b", "e")):
                return 1.0 / (m * m) - 1.0 / m + m / (2.0 * (m - 1))
            if pair == frozenset(("b", "f")):
                return (
                    m * (m**3 - 5 * m * m + 11 * m - 12) + 8
                ) / (2.0 * m * m * (m - 1) * (m - 2)) + 2.0 * cos / (m * m)
            if pair == frozenset(("cd", "e")):
                return 1.0 / (m * m) + 1.0 / (2.0 * (m - 1))
            if pair == frozenset(("cd", "f")):
                return (3 * m * m - 8 * m + 8 + 2 * (m - 2) ** 2 * cos) / (
                    2.0 * m * m * (m - 1) * (m - 2)
                )
            if pair == frozenset(("e", "f")):
                return (
                    1.0 / (m * m) + 1.0 / m - 1.0 / (m - 1) + 1.0 / (2.0 * (m - 2))
                )
    raise UnsupportedCaseError(
        f"no analytic efficiency for {spec!r} with superposed classes "
        f"{label1!r}, {label2!r}"
    )


def efficiency_closed_form(
    spec: FamilySpec,
    class1: str,
    class2: str | None = None,
    theta: float = 0.0,
) -> float:
    """Analytic transport efficiency for a localized class vertex, or for the
    superposition (|v1> + e^{i theta} |v2>) / sqrt(2) of representatives of
    two classes. Raises UnsupportedCaseError for uncovered combinations."""
    if class2 is None:
        return _closed_form_localized(spec, class1)
    return _closed_form_pair(spec, class1, class2, theta)


# --- combined report ---------------------------------------------------------------


@dataclass(frozen=True)
class EfficiencyReport:
    """Transport efficiency by route. ``None`` marks a route that was not
    requested or has no analytic formula for the given combination."""

    eta_subspace: float
    m: int
    eta_closed_form: float | None = None
    eta_lambda: float | None = None
    eta_dynamic: float | None = None
    eta_survival: float | None = None


def efficiency_report(
    spec: FamilySpec,
    psi0: InitialState,
    *,
    class1: str | None = None,
    class2: str | None = None,
    theta: float = 0.0,
    kappa: float = 1.0,
    oracle: bool = False,
    dt: float = 1e-3,
    t_max: float = 500.0,
    tol: float = 1e-10,
) -> EfficiencyReport:
    """Evaluate every applicable route for one (graph, initial state) point.

    The subspace route always runs. The analytic route runs when class
    labels are supplied and covered. With ``oracle=True`` the eigenvector
    route and the dynamical integration run as well.
    """
    g = build(spec)
    basis = krylov_basis(g, 0, tol)
    psi = initial_state_vector(psi0, g.n)
    eta_sub = basis.overlap(psi)

    eta_cf = None
    if class1 is not None:
        try:
            eta_cf = efficiency_closed_form(spec, class1, class2, theta)
        except UnsupportedCaseError:
            eta_cf = None

    eta_lam = eta_dyn = eta_sur = None
    if oracle:
        eta_lam = efficiency_lambda(g, 0, psi)
        eta_dyn, eta_sur = efficiency_dynamic(
            g, TrapSpec(0, kappa), psi, dt=dt, t_max=t_max
        )

    return EfficiencyReport(
        eta_subspace=eta_sub,
        m=basis.m,
        eta_closed_form=eta_cf,
        eta_lambda=eta_lam,
        eta_dynamic=eta_dyn,
        eta_survival=eta_sur,
    )


__all__ = [
    "EfficiencyReport",
    "Explicit",
    "InitialState",
    "Localized",
    "Superposition",
    "SuperpositionMode",
    "TrapSpec",
    "UnsupportedCaseError",
    "class_representative",
    "class_uniform_state",
    "class_vertices",
    "efficiency_closed_form",
    "efficiency_dynamic",
    "efficiency_lambda",
    "efficiency_report",
    "efficiency_subspace",
    "initial_state_vector",
    "lambda_subspace",
    "superposition_rule",
]
