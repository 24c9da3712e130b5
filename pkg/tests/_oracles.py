"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive (exhaustive enumeration, BFS) and
shares no code with the implementation paths it checks.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np


def components(n: int, edges: set[tuple[int, int]]) -> int:
    seen: set[int] = set()
    count = 0
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for start in range(n):
        if start in seen:
            continue
        count += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return count


def brute_vertex_connectivity(n: int, edges: set[tuple[int, int]]) -> int:
    """Smallest vertex set whose removal disconnects the graph; n - 1 when
    no such set exists (complete graph convention)."""
    for size in range(n - 1):
        for removed in itertools.combinations(range(n), size):
            keep = [v for v in range(n) if v not in removed]
            if len(keep) < 2:
                continue
            relabel = {v: i for i, v in enumerate(keep)}
            sub = {
                (relabel[i], relabel[j])
                for i, j in edges
                if i in relabel and j in relabel
            }
            if components(len(keep), sub) > 1:
                return size
    return n - 1


def brute_edge_connectivity(n: int, edges: set[tuple[int, int]]) -> int:
    for size in range(len(edges) + 1):
        for removed in itertools.combinations(sorted(edges), size):
            sub = edges - set(removed)
            if components(n, sub) > 1:
                return size
    return len(edges)


def pair_count_srg(adjacency: np.ndarray) -> tuple[int, int, int, int] | None:
    """(n, k, lam, mu) by direct common-neighbor counting, or None."""
    n = adjacency.shape[0]
    degs = adjacency.sum(axis=1)
    if not np.all(degs == degs[0]):
        return None
    k = int(degs[0])
    lam_set = set()
    mu_set = set()
    for i in range(n):
        for j in range(i + 1, n):
            common = int(np.sum(adjacency[i] * adjacency[j]))
            if adjacency[i, j]:
                lam_set.add(common)
            else:
                mu_set.add(common)
    if len(lam_set) != 1 or len(mu_set) != 1:
        return None
    return n, k, lam_set.pop(), mu_set.pop()


def girth(adjacency: np.ndarray) -> int:
    """Shortest cycle length via BFS from every vertex."""
    n = adjacency.shape[0]
    best = n + 1
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(adjacency[u]):
                v = int(v)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def symmetric_2x2_eigenvalues(a: float, b: float, d: float) -> np.ndarray:
    tr = a + d
    disc = np.sqrt((a - d) ** 2 + 4 * b * b)
    return np.sort(np.array([(tr - disc) / 2, (tr + disc) / 2]))


def symmetric_3x3_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Closed-form real roots of the characteristic cubic (trigonometric
    method; valid because a symmetric matrix has a real spectrum).

    The float64 formula loses ~sqrt(eps) accuracy near double roots, so
    nearly degenerate spectra are resolved through the exact integer
    characteristic polynomial in high precision instead.
    """
    q = np.trace(m) / 3.0
    b = m - q * np.eye(3)
    p2 = np.sum(b * b) / 6.0
    if p2 <= 0.0:
        return np.full(3, q)
    p = np.sqrt(p2)
    det_b = np.linalg.det(b)
    r = det_b / (2.0 * p**3)
    r = min(1.0, max(-1.0, r))
    if 1.0 - abs(r) < 1e-6:
        return _integer_char_poly_roots(m)
    phi = np.arccos(r) / 3.0
    eig1 = q + 2.0 * p * np.cos(phi)
    eig3 = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    eig2 = 3.0 * q - eig1 - eig3
    return np.sort(np.array([eig1, eig2, eig3]))


def _integer_char_poly_roots(m: np.ndarray) -> np.ndarray:
    """Roots of det(lambda*I - M) for an integer symmetric 3x3 matrix.

    A repeated root of a monic integer cubic is necessarily an integer, so
    integer roots are peeled off by exact scanning within the Gershgorin
    bound and the leftover factor (degree <= 2, simple roots) is solved by
    the quadratic formula.
    """
    entries = [[int(round(m[i, j])) for j in range(3)] for i in range(3)]
    (a, b, c), (_, d, e), (_, _, f) = entries
    trace = a + d + f
    minors = (a * d - b * b) + (a * f - c * c) + (d * f - e * e)
    det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)
    coeffs = [1, -trace, minors, -det]  # monic, exact

    bound = max(sum(abs(x) for x in row) for row in entries)
    roots: list[float] = []
    while len(coeffs) > 1:
        found = None
        for lam in range(-bound, bound + 1):
            value = 0
            for coef in coeffs:
                value = value * lam + coef
            if value == 0:
                found = lam
                break
        if found is None:
            break
        roots.append(float(found))
        deflated = [coeffs[0]]
        for coef in coeffs[1:-1]:
            deflated.append(coef + found * deflated[-1])
        coeffs = deflated
    if len(coeffs) == 3:
        _, p, q = coeffs
        disc = np.sqrt(p * p - 4 * q)
        roots.extend([(-p - disc) / 2, (-p + disc) / 2])
    elif len(coeffs) == 2:
        roots.append(-coeffs[1] / coeffs[0])
    elif len(coeffs) == 4:
        # no integer root, so all three roots are simple: Durand-Kerner in
        # high precision converges
        import mpmath

        with mpmath.workdps(50):
            for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=200):
                roots.append(float(mpmath.re(r)))
    return np.sort(np.array(roots))
