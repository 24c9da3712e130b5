"""Graph connectivity measures.

Vertex and edge connectivity come from unit-capacity max-flow (BFS
augmenting paths; vertex version on the standard vertex-split digraph).
Algebraic connectivity is the second-smallest Laplacian eigenvalue; the
normalized variant divides entries by sqrt(deg_i * deg_j).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import FamilySpec, Graph, build, family_name, laplacian
from .numerics import sym_eig
from .transport import Localized, class_representative, efficiency_subspace


def _max_flow(capacity: np.ndarray, s: int, t: int) -> int:
    """Edmonds-Karp max flow on an integer capacity matrix."""
    residual = capacity.astype(np.int64).copy()
    n = residual.shape[0]
    flow = 0
    while True:
        parent = np.full(n, -1, dtype=np.int64)
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for v in np.flatnonzero(residual[u] > 0):
                if parent[v] < 0:
                    parent[v] = u
                    queue.append(int(v))
        if parent[t] < 0:
            return flow
        bottleneck = None
        v = t
        while v != s:
            u = int(parent[v])
            c = int(residual[u, v])
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = t
        while v != s:
            u = int(parent[v])
            residual[u, v] -= bottleneck
            residual[v, u] += bottleneck
            v = u
        flow += bottleneck


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose removal disconnects the graph.

    Equals the minimum over targets t of the unit-capacity max flow from a
    fixed source; 0 for a disconnected graph.
    """
    if g.n < 2:
        return 0
    capacity = g.adjacency.astype(np.int64)
    return min(_max_flow(capacity, 0, t) for t in range(1, g.n))


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects the graph.

    Complete graphs have no separating set; by convention they score n - 1.
    Otherwise this is the minimum over non-adjacent pairs of the max flow
    through the vertex-split digraph with unit vertex capacities.
    """
    if not g.is_connected():
        return 0
    adj = g.adjacency
    n = g.n
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1
    # split: node v -> in-node v, out-node v + n, internal capacity 1
    big = n
    capacity = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for v in range(n):
        capacity[v, v + n] = 1
    for i, j in g.edges:
        capacity[i + n, j] = big
        capacity[j + n, i] = big
    best = None
    for s in range(n):
        for t in range(s + 1, n):
            if adj[s, t]:
                continue
            cut = _max_flow(capacity, s + n, t)
            if best is None or cut < best:
                best = cut
    assert best is not None  # non-complete graph has a non-adjacent pair
    return best


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise ValueError("needs at least 2 vertices")
    return float(sym_eig(laplacian(g)).values[1])


def normalized_laplacian(g: Graph) -> np.ndarray:
    degs = g.degrees
    if np.any(degs == 0):
        raise ValueError("normalized Laplacian undefined with isolated vertices")
    inv_sqrt = 1.0 / np.sqrt(degs)
    return laplacian(g) * np.outer(inv_sqrt, inv_sqrt)


def normalized_algebraic_connectivity(g: Graph) -> float:
    """Second-smallest eigenvalue of the degree-normalized Laplacian."""
    if g.n < 2:
        raise ValueError("needs at least 2 vertices")
    return float(sym_eig(normalized_laplacian(g)).values[1])


@dataclass(frozen=True)
class ConnectivityReport:
    min_degree: int
    vertex_conn: int
    edge_conn: int
    algebraic_conn: float
    normalized_algebraic_conn: float


def connectivity_report(g: Graph) -> ConnectivityReport:
    return ConnectivityReport(
        min_degree=int(g.degrees.min()),
        vertex_conn=vertex_connectivity(g),
        edge_conn=edge_connectivity(g),
        algebraic_conn=algebraic_connectivity(g),
        normalized_algebraic_conn=normalized_algebraic_connectivity(g),
    )


@dataclass(frozen=True)
class CorrelationRow:
    """One (graph instance, vertex class) point of the efficiency-versus-
    connectivity comparison."""

    family: str
    n: int
    vertex_class: str
    eta: float
    vertex_conn: int
    edge_conn: int
    algebraic_conn: float


def correlation_table(
    instances: Sequence[tuple[FamilySpec, str]],
) -> list[CorrelationRow]:
    """Transport efficiency of a class representative next to the instance's
    connectivity measures, one row per (instance, class)."""
    graphs: dict[FamilySpec, Graph] = {}
    conn: dict[FamilySpec, tuple[int, int, float]] = {}
    rows = []
    for spec, label in instances:
        if spec not in graphs:
            g = build(spec)
            graphs[spec] = g
            conn[spec] = (
                vertex_connectivity(g),
                edge_connectivity(g),
                algebraic_connectivity(g),
            )
        g = graphs[spec]
        v, e, a = conn[spec]
        eta = efficiency_subspace(g, 0, Localized(class_representative(g, label)))
        rows.append(
            CorrelationRow(
                family=family_name(spec),
                n=g.n,
                vertex_class=label,
                eta=eta,
                vertex_conn=v,
                edge_conn=e,
                algebraic_conn=a,
            )
        )
    return rows
