"""Simple undirected graphs with 0/1 edge weights and their Laplacians.

Vertices are numbered 1..n. An edge is a pair ``(i, j)`` with ``i > j``;
edges are kept in the complete-graph order, lexicographic in ``(i, j)``:
(2,1), (3,1), (3,2), (4,1), ... so edge indices, incidence columns and
edge-selector coordinates all agree.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import EdgeCountMismatch, InvalidEdge, NoEdges, TooSmall, VertexCountMismatch
from .linalg import sym_eig
from .majorization import pad
from .subspaces import coordinate_subspace

__all__ = [
    "Graph",
    "SpectrumReport",
    "ComparisonReport",
    "edge_index",
    "complete_graph",
    "incidence_matrix",
    "vertex_laplacian",
    "edge_laplacian",
    "diffusion_operator",
    "selector_diffusion",
    "edge_selector",
    "laplacian_spectrum",
    "nonzero_spectrum",
    "spectra_compare",
]


def edge_index(i, j):
    """0-based position of edge ``(i, j)``, ``i > j``, in the complete-graph order."""
    return (i - 1) * (i - 2) // 2 + (j - 1)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise TooSmall(f"graph needs at least one vertex, got n={self.n}")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise InvalidEdge(f"self-loop at vertex {i}")
            if not (1 <= j < i <= self.n):
                raise InvalidEdge(f"edge ({i}, {j}) is not (i, j) with n >= i > j >= 1")
            if (i, j) in seen:
                raise InvalidEdge(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise InvalidEdge("edges are not in canonical order")

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from unordered endpoint pairs in any order."""
        canon = []
        for a, b in edges:
            a, b = int(a), int(b)
            canon.append((a, b) if a > b else (b, a))
        return cls(int(n), tuple(sorted(canon)))

    @property
    def m(self):
        return len(self.edges)

    def edge_set(self):
        return frozenset(self.edges)

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed to ``perm[v - 1]`` (1-based labels)."""
        return Graph.from_edges(self.n, [(perm[i - 1], perm[j - 1]) for i, j in self.edges])

    def union(self, other):
        if other.n != self.n:
            raise VertexCountMismatch(f"vertex counts differ: {self.n} vs {other.n}")
        return Graph(self.n, tuple(sorted(self.edge_set() | other.edge_set())))

    def without(self, edge):
        return Graph(self.n, tuple(e for e in self.edges if e != edge))


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Laplacian eigenvalues in nonincreasing order.

    ``source`` is one of ``vertex-laplacian``, ``edge-laplacian`` or
    ``complete-graph``; ``n`` and ``m`` are the vertex and edge counts.
    """

    values: np.ndarray
    source: str
    n: int
    m: int


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    spectrum1: np.ndarray
    spectrum2: np.ndarray
    lhs: float
    differing_edges: int
    bound: int
    union_lambda_max: float
    sharp_bound: float
    tolerance_used: float

    @property
    def holds(self):
        return self.lhs <= self.bound + self.tolerance_used

    @property
    def sharp_holds(self):
        return self.lhs <= self.sharp_bound + self.tolerance_used

    @property
    def margin(self):
        return self.bound - self.lhs


def complete_graph(n):
    if n < 2:
        raise TooSmall(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple((i, j) for i in range(2, n + 1) for j in range(1, i)))


def _require_edges(g):
    if g.m == 0:
        raise NoEdges("graph has no edges")


def incidence_matrix(g):
    """Vertex-by-edge matrix: +1 at the larger endpoint, -1 at the smaller."""
    _require_edges(g)
    q = np.zeros((g.n, g.m))
    for k, (i, j) in enumerate(g.edges):
        q[i - 1, k] = 1.0
        q[j - 1, k] = -1.0
    return q


def vertex_laplacian(g):
    q = incidence_matrix(g)
    return q @ q.T


def edge_laplacian(g):
    q = incidence_matrix(g)
    return q.T @ q


def diffusion_operator(g, weights=None):
    """``Q diag(w) Q^T`` over the present edges; unit weights by default."""
    q = incidence_matrix(g)
    w = np.ones(g.m) if weights is None else np.asarray(weights, dtype=float)
    return (q * w) @ q.T


def selector_diffusion(g, weights_c=None):
    """``Q_c diag(w_c) Q_c^T`` over the complete graph.

    ``weights_c`` defaults to the 0/1 indicator of the edges of ``g``.
    """
    qc = incidence_matrix(complete_graph(g.n))
    if weights_c is None:
        weights_c = np.zeros(qc.shape[1])
        weights_c[[edge_index(i, j) for i, j in g.edges]] = 1.0
    return (qc * np.asarray(weights_c, dtype=float)) @ qc.T


def edge_selector(g):
    """Coordinate subspace of the complete graph's edge space spanned by ``g``'s edges."""
    _require_edges(g)
    size = g.n * (g.n - 1) // 2
    return coordinate_subspace(size, [edge_index(i, j) for i, j in g.edges])


def laplacian_spectrum(g, kind="vertex-laplacian"):
    if kind == "vertex-laplacian":
        values = sym_eig(vertex_laplacian(g)).values
    elif kind == "edge-laplacian":
        values = sym_eig(edge_laplacian(g)).values
    elif kind == "complete-graph":
        values = sym_eig(vertex_laplacian(complete_graph(g.n))).values
    else:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    return SpectrumReport(values, kind, g.n, g.m)


def nonzero_spectrum(values, n):
    """Drop eigenvalues below the structural zero threshold ``1e-8 * n``."""
    values = np.asarray(values, dtype=float)
    return values[values > 1e-8 * n]


def spectra_compare(g1, g2, tol=None):
    """Compare vertex-Laplacian spectra of two graphs with equally many edges.

    ``lhs = sum_k |λ¹_k - λ²_k|`` is bounded by ``n * l`` where ``l`` is the
    number of edges of ``g1`` missing from ``g2``, and by the sharper
    ``λmax(union) * l``.
    """
    if g1.n != g2.n:
        raise VertexCountMismatch(f"vertex counts differ: {g1.n} vs {g2.n}")
    if g1.m != g2.m:
        raise EdgeCountMismatch(f"edge counts differ: {g1.m} vs {g2.m}")
    n = g1.n
    spec1 = _vertex_spectrum(g1)
    spec2 = _vertex_spectrum(g2)
    lhs = float(np.sum(np.abs(spec1 - spec2)))
    l = len(g1.edge_set() - g2.edge_set())
    union = g1.union(g2)
    lam_max = float(_vertex_spectrum(union)[0])
    bound = n * l
    if tol is None:
        tol = TOL.majorization_tol([bound], n)
    return ComparisonReport(spec1, spec2, lhs, l, bound, lam_max, lam_max * l, float(tol))


def _vertex_spectrum(g):
    if g.m == 0:
        return np.zeros(g.n)
    return pad(sym_eig(vertex_laplacian(g)).values, g.n)
