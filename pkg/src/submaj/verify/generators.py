"""Seeded random instances for the theorem checks."""

import numpy as np

from ..errors import BadDims, BadRange, ZeroRank
from ..graphs import Graph, complete_graph
from ..linalg import orthonormalize
from ..subspaces import Subspace


def as_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_subspace(n, k, seed):
    """Orthonormalized Gaussian ``n x k`` sample."""
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = as_rng(seed)
    while True:
        try:
            basis = orthonormalize(rng.standard_normal((n, k)))
        except ZeroRank:
            continue
        if basis.shape[1] == k:
            return Subspace(basis)


def random_orthogonal(n, seed):
    return random_subspace(n, n, seed).basis


def random_symmetric(n, lo, hi, seed):
    """Symmetric matrix with spectrum drawn uniformly from ``[lo, hi]``."""
    if not lo < hi:
        raise BadRange(f"need lo < hi, got [{lo}, {hi}]")
    rng = as_rng(seed)
    q = random_orthogonal(n, rng)
    d = rng.uniform(lo, hi, size=n)
    a = (q * d) @ q.T
    return 0.5 * (a + a.T)


def perturbed_subspace(x, scale, seed):
    """Subspace of the same dimension at distance roughly ``scale`` from ``x``."""
    rng = as_rng(seed)
    while True:
        basis = orthonormalize(x.basis + scale * rng.standard_normal(x.basis.shape))
        if basis.shape[1] == x.dim:
            return Subspace(basis)


def sharing_subspace(x, k, shared, seed):
    """``k``-dimensional subspace that contains ``shared`` directions of ``x``."""
    rng = as_rng(seed)
    n = x.ambient_dim
    shared = min(shared, x.dim, k)
    while True:
        cols = np.hstack([x.basis[:, :shared], rng.standard_normal((n, k - shared))])
        basis = orthonormalize(cols)
        if basis.shape[1] == k:
            return Subspace(basis)


def random_partner(x, k, rng):
    """A ``k``-dimensional companion of ``x``: generic, nearby, or overlapping.

    Mixing the three kinds exercises small angles and exact zero angles
    as well as the generic case.
    """
    kind = rng.integers(3)
    if kind == 1 and k == x.dim:
        return perturbed_subspace(x, 10.0 ** rng.uniform(-8, -1), rng)
    if kind == 2:
        return sharing_subspace(x, k, int(rng.integers(1, min(k, x.dim) + 1)), rng)
    return random_subspace(x.ambient_dim, k, rng)


def random_graph(n, m, rng):
    all_edges = complete_graph(n).edges
    pick = rng.choice(len(all_edges), size=m, replace=False)
    return Graph(n, tuple(sorted(all_edges[i] for i in pick)))


def random_graph_pair(n, rng):
    """Two graphs on ``n`` vertices with the same number of edges."""
    total = n * (n - 1) // 2
    m = int(rng.integers(1, total + 1))
    g1 = random_graph(n, m, rng)
    if rng.integers(2) == 0:
        return g1, random_graph(n, m, rng)
    # swap a few edges out for absent ones
    present = list(g1.edges)
    absent = [e for e in complete_graph(n).edges if e not in g1.edge_set()]
    swaps = int(rng.integers(0, min(len(present), len(absent)) + 1))
    drop = set(tuple(present[i]) for i in rng.choice(len(present), size=swaps, replace=False))
    add = [absent[i] for i in rng.choice(len(absent), size=swaps, replace=False)] if swaps else []
    edges = [e for e in present if e not in drop] + add
    return g1, Graph(n, tuple(sorted(edges)))
