"""Dense real matrix kernels.

Matrices are plain 2-D ``float64`` numpy arrays. Everything here is a pure
function of its inputs; results are fresh arrays.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import TOL, Tolerances
from .errors import (
    AsymmetryExceedsTolerance,
    InputError,
    NoConvergence,
    NonFiniteEntry,
    NonSquare,
    NotPSD,
    ZeroRank,
)

__all__ = [
    "EigDecomposition",
    "SvdDecomposition",
    "as_matrix",
    "symmetrized",
    "sym_eig",
    "eigvals",
    "svd",
    "singvals",
    "orthonormalize",
    "orthogonal_complement_basis",
    "sqrt_psd",
]

_SVD_REL_TOL = 4 * np.finfo(float).eps


@dataclass(frozen=True)
class EigDecomposition:
    """Eigenvalues in nonincreasing order; ``vectors[:, k]`` pairs with ``values[k]``."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self):
        return (self.vectors * self.values) @ self.vectors.T


@dataclass(frozen=True)
class SvdDecomposition:
    """Economy SVD ``A = left @ diag(singular_values) @ right.T``."""

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray
    sweeps: int = 0

    def reconstruct(self):
        return (self.left * self.singular_values) @ self.right.T


def as_matrix(a, name="matrix"):
    """Validate and convert ``a`` to a finite 2-D float array (copy)."""
    m = np.array(a, dtype=float, copy=True)
    if m.ndim != 2:
        raise InputError(f"{name} must be 2-dimensional, got shape {m.shape}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise InputError(f"{name} must be nonempty, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteEntry(f"{name} has NaN or infinite entries")
    return m


def symmetrized(a, tol: Tolerances = TOL, name="matrix"):
    """Validated ``(A + A.T) / 2``; raises if the asymmetry exceeds ``tol.sym_tol``."""
    a = as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise NonSquare(f"{name} is {a.shape[0]}x{a.shape[1]}, expected square")
    defect = float(np.max(np.abs(a - a.T)))
    limit = tol.sym_tol(a)
    if defect > limit:
        raise AsymmetryExceedsTolerance(
            f"{name} asymmetry {defect:.3g} exceeds tolerance {limit:.3g}"
        )
    return 0.5 * (a + a.T)


def sym_eig(a, tol: Tolerances = TOL, name="matrix"):
    """Symmetric eigendecomposition by cyclic Jacobi rotations.

    The input is symmetrized as ``(A + A.T) / 2`` first. Sweeps stop once the
    off-diagonal Frobenius mass drops below ``tol.jacobi_rel * ||A||_F``.
    """
    s = symmetrized(a, tol, name)
    d, v, ok, sweeps = _kernels.jacobi_eigh(s.copy(), tol.jacobi_rel, tol.max_sweeps)
    if not ok:
        raise NoConvergence(f"Jacobi eigensolver did not converge in {tol.max_sweeps} sweeps")
    order = np.argsort(-d, kind="stable")
    return EigDecomposition(d[order], v[:, order], int(sweeps))


def eigvals(a, tol: Tolerances = TOL):
    return sym_eig(a, tol).values


def _complement_columns(q, count):
    """``count`` orthonormal columns orthogonal to the orthonormal columns of ``q``."""
    m = q.shape[0]
    resid = np.eye(m) - q @ q.T
    d, v, ok, _ = _kernels.jacobi_eigh(0.5 * (resid + resid.T), TOL.jacobi_rel, TOL.max_sweeps)
    if not ok:
        raise NoConvergence("complement eigensolve did not converge")
    order = np.argsort(-d, kind="stable")
    return v[:, order[:count]]


def svd(a, tol: Tolerances = TOL):
    """Economy SVD by one-sided (Hestenes) Jacobi.

    Singular values are column norms of the orthogonalized iterate, which
    keeps small singular values accurate to high relative precision.
    """
    a = as_matrix(a)
    transposed = a.shape[0] < a.shape[1]
    work = a.T.copy() if transposed else a.copy()
    floor = np.finfo(float).eps * max(work.shape) * float(np.linalg.norm(work))
    u, v, ok, sweeps = _kernels.one_sided_jacobi(work, _SVD_REL_TOL, floor, tol.max_sweeps)
    if not ok:
        raise NoConvergence(f"one-sided Jacobi SVD did not converge in {tol.max_sweeps} sweeps")
    sigma = np.sqrt(np.sum(u * u, axis=0))
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    u = u[:, order]
    v = v[:, order]
    # columns at or below the floor have no reliable direction; their left
    # vectors are completed from the orthogonal complement instead
    live = sigma > max(floor, np.finfo(float).tiny)
    left = np.zeros_like(u)
    left[:, live] = u[:, live] / sigma[live]
    if not np.all(live):
        k = int(np.count_nonzero(live))
        left[:, k:] = _complement_columns(left[:, :k], u.shape[1] - k)
    if transposed:
        left, v = v, left
    return SvdDecomposition(sigma, left, v, int(sweeps))


def singvals(a, tol: Tolerances = TOL):
    return svd(a, tol).singular_values


def orthonormalize(b, tol: Tolerances = TOL):
    """Orthonormal basis of the column span of ``b``.

    Classical Gram-Schmidt with a second re-orthogonalization pass; a column
    whose residual falls below ``tol.rank_tol(b)`` is dropped as dependent.
    """
    b = as_matrix(b)
    n, k = b.shape
    cutoff = tol.rank_tol(b)
    q = np.empty((n, 0))
    for j in range(k):
        w = b[:, j].copy()
        for _ in range(2):
            w -= q @ (q.T @ w)
        nrm = float(np.linalg.norm(w))
        if nrm > cutoff and nrm > 0.0:
            q = np.column_stack([q, w / nrm])
    if q.shape[1] == 0:
        raise ZeroRank("all columns are numerically zero")
    return q


def orthogonal_complement_basis(q):
    """Orthonormal basis of the complement of span(q) for orthonormal ``q``."""
    q = as_matrix(q)
    n, k = q.shape
    if k >= n:
        return np.empty((n, 0))
    return _complement_columns(q, n - k)


def sqrt_psd(a, tol: Tolerances = TOL):
    """Symmetric nonnegative square root.

    Eigenvalues down to ``-tol.psd_tol(a)`` are treated as rounding noise and
    clamped to zero.
    """
    eig = sym_eig(a, tol)
    floor = -tol.psd_tol(as_matrix(a))
    if eig.values.size and eig.values[-1] < floor:
        raise NotPSD(f"eigenvalue {eig.values[-1]:.3g} below -{-floor:.3g}")
    root = np.sqrt(np.clip(eig.values, 0.0, None))
    r = (eig.vectors * root) @ eig.vectors.T
    return 0.5 * (r + r.T)
