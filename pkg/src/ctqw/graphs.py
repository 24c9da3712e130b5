"""Graph families for quantum-walk transport studies.

Every builder returns an immutable :class:`Graph` with 0-based vertex
indices, the trap vertex at index 0 (class ``"w"``), and each remaining
vertex tagged with the label of its symmetry class. Graphs are small
(desk scale, a few hundred vertices at most) and stored densely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with optional vertex-class labels.

    ``edges`` is canonicalized to a lexicographically sorted tuple of
    ``(i, j)`` pairs with ``i < j``. ``classes``, when present, must
    assign a label to every vertex.
    """

    n: int
    edges: tuple[Edge, ...]
    classes: dict[int, str] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        canon = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")
            e = (min(i, j), max(i, j))
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.classes is not None:
            if set(self.classes) != set(range(self.n)):
                raise ValueError("class map must assign a label to every vertex")

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1.0
        a.setflags(write=False)
        return a

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self.adjacency.sum(axis=1)
        d.setflags(write=False)
        return d

    def class_vertices(self, label: str) -> tuple[int, ...]:
        if self.classes is None:
            raise ValueError("graph has no class labels")
        return tuple(v for v in range(self.n) if self.classes[v] == label)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        adj = self.adjacency
        while stack:
            u = stack.pop()
            for v in np.flatnonzero(adj[u]):
                if int(v) not in seen:
                    seen.add(int(v))
                    stack.append(int(v))
        return len(seen) == self.n


def laplacian(g: Graph) -> np.ndarray:
    """Graph Laplacian ``L = D - A`` (real symmetric, rows sum to zero)."""
    return np.diag(g.degrees) - g.adjacency


# --- family parameter records -------------------------------------------------


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    n1: int
    n2: int


@dataclass(frozen=True)
class PaleyPrime:
    p: int


@dataclass(frozen=True)
class Petersen:
    pass


@dataclass(frozen=True)
class Rook:
    n: int


@dataclass(frozen=True)
class JoinedComplete:
    half: int


@dataclass(frozen=True)
class Simplex:
    m: int


FamilySpec = Union[
    Complete, CompleteBipartite, PaleyPrime, Petersen, Rook, JoinedComplete, Simplex
]

_FAMILY_NAMES = {
    Complete: "complete",
    CompleteBipartite: "cbg",
    PaleyPrime: "paley",
    Petersen: "petersen",
    Rook: "rook",
    JoinedComplete: "jcg",
    Simplex: "simplex",
}


def family_name(spec: FamilySpec) -> str:
    return _FAMILY_NAMES[type(spec)]


def build(spec: FamilySpec) -> Graph:
    """Construct the graph described by a family parameter record."""
    if isinstance(spec, Complete):
        return build_complete(spec.n)
    if isinstance(spec, CompleteBipartite):
        return build_complete_bipartite(spec.n1, spec.n2)
    if isinstance(spec, PaleyPrime):
        return build_paley_prime(spec.p)
    if isinstance(spec, Petersen):
        return build_petersen()
    if isinstance(spec, Rook):
        return build_rook(spec.n)
    if isinstance(spec, JoinedComplete):
        return build_joined_complete(spec.half)
    if isinstance(spec, Simplex):
        return build_simplex(spec.m)
    raise ValueError(f"unknown family spec {spec!r}")


# --- builders -----------------------------------------------------------------


def build_complete(n: int) -> Graph:
    """Complete graph K_n. Classes: trap ``w`` plus one class ``a``."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    classes = {0: "w", **{v: "a" for v in range(1, n)}}
    return Graph(n, edges, classes)


def build_complete_bipartite(n1: int, n2: int) -> Graph:
    """Complete bipartite graph K_{n1,n2} with the trap in the first partition.

    Vertices 0..n1-1 form the trap-side partition (``w`` then class ``b``),
    vertices n1..n1+n2-1 form the opposite partition (class ``a``).
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both partitions must be non-empty")
    n = n1 + n2
    edges = tuple((i, j) for i in range(n1) for j in range(n1, n))
    classes = {0: "w"}
    classes.update({v: "b" for v in range(1, n1)})
    classes.update({v: "a" for v in range(n1, n)})
    return Graph(n, edges, classes)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def build_paley_prime(p: int) -> Graph:
    """Paley graph on Z_p, edge (i, j) iff i - j is a nonzero square mod p.

    Restricted to prime p with p = 1 (mod 4), which makes the difference
    relation symmetric (-1 is then a quadratic residue).
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p % 4 != 1:
        raise ValueError(f"p={p} must satisfy p = 1 (mod 4)")
    residues = {(x * x) % p for x in range(1, p)}
    edges = tuple(
        (i, j) for i in range(p) for j in range(i + 1, p) if (j - i) % p in residues
    )
    classes = {0: "w"}
    for v in range(1, p):
        classes[v] = "a" if v % p in residues else "b"
    return Graph(p, edges, classes)


def build_petersen() -> Graph:
    """Petersen graph: outer 5-cycle (vertices 0-4, trap at 0), spokes to an
    inner pentagram (vertices 5-9)."""
    edges = []
    for j in range(5):
        edges.append((j, (j + 1) % 5))
        edges.append((j, j + 5))
        edges.append((5 + j, 5 + (j + 2) % 5))
    g = Graph(10, tuple(edges))
    adj = g.adjacency
    classes = {0: "w"}
    for v in range(1, 10):
        classes[v] = "a" if adj[0, v] else "b"
    return Graph(10, g.edges, classes)


def build_rook(n: int) -> Graph:
    """Rook's graph on an n x n board: cell (r, c) -> vertex r*n + c, edges
    within each row and each column."""
    if n < 2:
        raise ValueError("rook graph needs n >= 2")
    edges = []
    for r in range(n):
        for c1 in range(n):
            for c2 in range(c1 + 1, n):
                edges.append((r * n + c1, r * n + c2))  # same row
                edges.append((c1 * n + r, c2 * n + r))  # same column
    g = Graph(n * n, tuple(edges))
    adj = g.adjacency
    classes = {0: "w"}
    for v in range(1, n * n):
        classes[v] = "a" if adj[0, v] else "b"
    return Graph(n * n, g.edges, classes)


def build_joined_complete(half: int) -> Graph:
    """Two complete graphs of `half` vertices joined by one bridge edge.

    Vertex layout: 0 = trap ``w``, 1..half-2 = class ``a``, half-1 = ``b1``
    (bridge, trap side), half = ``b2`` (bridge, far side), rest = class ``c``.
    """
    if half < 2:
        raise ValueError("each complete graph needs at least 2 vertices")
    n = 2 * half
    edges = []
    for base in (0, half):
        for i in range(half):
            for j in range(i + 1, half):
                edges.append((base + i, base + j))
    edges.append((half - 1, half))  # bridge
    classes = {0: "w", half - 1: "b1", half: "b2"}
    classes.update({v: "a" for v in range(1, half - 1)})
    classes.update({v: "c" for v in range(half + 1, n)})
    return Graph(n, tuple(edges), classes)


def build_simplex(m: int) -> Graph:
    """First-order truncated m-simplex lattice: m+1 copies of K_m, each vertex
    carrying exactly one inter-block edge.

    Blocks are numbered 1..m+1 with local vertices 1..m; global index is
    (block-1)*m + (local-1). Local vertex i of block g is wired to local
    vertex m+1-i of block 1 + ((i+g-1) mod (m+1)), which pairs every vertex
    with exactly one partner and keeps the graph m-regular.

    Classes: ``w`` = (1,1); ``a`` = rest of block 1; ``b`` = inter-partner of
    ``w``; ``c`` = rest of b's block; ``d``/``e`` = inter-partners of ``a``/
    ``c`` vertices; ``f`` = all remaining vertices.
    """
    if m < 2:
        raise ValueError("simplex needs m >= 2")
    blocks = m + 1
    n = m * blocks

    def gidx(block: int, local: int) -> int:
        return (block - 1) * m + (local - 1)

    edges = set()
    for block in range(1, blocks + 1):
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                edges.add((gidx(block, i), gidx(block, j)))
            partner_block = 1 + (i + block - 1) % blocks
            u, v = gidx(block, i), gidx(partner_block, m + 1 - i)
            edges.add((min(u, v), max(u, v)))

    classes = {gidx(1, 1): "w"}
    for i in range(2, m + 1):
        classes[gidx(1, i)] = "a"
    classes[gidx(2, m)] = "b"
    for i in range(1, m):
        classes[gidx(2, i)] = "c"
    for block in range(3, blocks + 1):
        classes[gidx(block, m + 2 - block)] = "d"  # partner of an "a" vertex
        classes[gidx(block, m + 3 - block)] = "e"  # partner of a "c" vertex
        for i in range(1, m + 1):
            classes.setdefault(gidx(block, i), "f")
    return Graph(n, tuple(edges), classes)


# --- strongly regular graph validation ----------------------------------------


@dataclass(frozen=True)
class SrgParams:
    """Parameters (n, k, lam, mu) of a strongly regular graph."""

    n: int
    k: int
    lam: int
    mu: int


def srg_parameters(spec: FamilySpec) -> SrgParams | None:
    """Closed-form SRG parameters for the families that have them."""
    if isinstance(spec, PaleyPrime):
        p = spec.p
        return SrgParams(p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)
    if isinstance(spec, Petersen):
        return SrgParams(10, 3, 0, 1)
    if isinstance(spec, Rook):
        n = spec.n
        return SrgParams(n * n, 2 * (n - 1), n - 2, 2)
    return None


def validate_srg(g: Graph) -> SrgParams | None:
    """Check strong regularity by counting common neighbors over all pairs.

    Returns the parameters when the graph is a (connected, non-complete,
    non-edgeless) strongly regular graph and the identity
    k(k - lam - 1) = (n - k - 1) mu holds; returns None otherwise.
    """
    adj = g.adjacency
    n = g.n
    if not g.edges or len(g.edges) == n * (n - 1) // 2:
        return None
    if not g.is_connected():
        return None
    degs = g.degrees
    if not np.all(degs == degs[0]):
        return None
    k = int(degs[0])
    common = adj @ adj
    lam: int | None = None
    mu: int | None = None
    for i in range(n):
        for j in range(i + 1, n):
            c = int(common[i, j])
            if adj[i, j]:
                if lam is None:
                    lam = c
                elif lam != c:
                    return None
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    return None
    if lam is None or mu is None:
        return None
    if k * (k - lam - 1) != (n - k - 1) * mu:
        return None
    return SrgParams(n, k, lam, mu)


# --- JSON round trip ------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    """JSON-ready dict with lexicographically sorted edge list."""
    obj: dict = {"n": g.n, "edges": [[i, j] for i, j in g.edges]}
    if g.classes is not None:
        obj["classes"] = {str(v): g.classes[v] for v in range(g.n)}
    return obj


def graph_from_json(obj: dict) -> Graph:
    classes = None
    if "classes" in obj and obj["classes"] is not None:
        classes = {int(v): str(label) for v, label in obj["classes"].items()}
    return Graph(
        n=int(obj["n"]),
        edges=tuple((int(i), int(j)) for i, j in obj["edges"]),
        classes=classes,
    )
