"""Subspaces, orthogonal projectors and principal angles.

A :class:`Subspace` stores an orthonormal basis. Angles follow the usual
conventions: angles and sines nondecreasing, cosines nonincreasing.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AmbientMismatch, FullSpace, InputError
from .linalg import as_matrix, orthogonal_complement_basis, orthonormalize, singvals, sym_eig
from .majorization import pad

__all__ = [
    "Subspace",
    "AngleSet",
    "ProjectorDifferenceReport",
    "subspace_from_columns",
    "coordinate_subspace",
    "projector",
    "complement",
    "subspace_sum",
    "restriction",
    "principal_angles",
    "projector_difference_singvals",
    "complement_angle_identity",
    "complements_angle_identity",
    "restricted_product_spectrum",
]

HALF_PI = 0.5 * np.pi


@dataclass(frozen=True, eq=False)
class Subspace:
    basis: np.ndarray

    def __post_init__(self):
        b = self.basis
        if b.ndim != 2 or b.shape[1] < 1 or b.shape[1] > b.shape[0]:
            raise InputError(f"basis shape {b.shape} is not n x k with 1 <= k <= n")
        gram_defect = np.max(np.abs(b.T @ b - np.eye(b.shape[1])))
        if gram_defect > 1e-10:
            raise InputError(f"basis columns are not orthonormal (defect {gram_defect:.3g})")

    @property
    def ambient_dim(self):
        return self.basis.shape[0]

    @property
    def dim(self):
        return self.basis.shape[1]


@dataclass(frozen=True, eq=False)
class AngleSet:
    angles: np.ndarray
    cosines: np.ndarray
    sines: np.ndarray

    @property
    def count(self):
        return self.angles.size


@dataclass(frozen=True, eq=False)
class ProjectorDifferenceReport:
    """Measured ``S(P_X - P_Y)`` next to the prediction built from principal angles.

    Both vectors are zero-padded to a common length.
    """

    values: np.ndarray
    predicted: np.ndarray
    max_deviation: float

    def agrees(self, tol=1e-8):
        return self.max_deviation <= tol


def subspace_from_columns(b):
    return Subspace(orthonormalize(b))


def coordinate_subspace(n, indices):
    """Span of the coordinate vectors ``e_i`` (0-based ``indices``) in R^n."""
    idx = list(indices)
    if not idx:
        raise InputError("coordinate subspace needs at least one index")
    basis = np.zeros((n, len(idx)))
    basis[idx, np.arange(len(idx))] = 1.0
    return Subspace(basis)


def _same_ambient(x, y):
    if x.ambient_dim != y.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions differ: {x.ambient_dim} vs {y.ambient_dim}")


def projector(s):
    p = s.basis @ s.basis.T
    return 0.5 * (p + p.T)


def complement(s):
    if s.dim == s.ambient_dim:
        raise FullSpace("orthogonal complement of the full space is empty")
    return Subspace(orthogonal_complement_basis(s.basis))


def subspace_sum(x, y):
    _same_ambient(x, y)
    return Subspace(orthonormalize(np.hstack([x.basis, y.basis])))


def restriction(a, s):
    """Matrix of ``P_S A |_S`` in the basis of ``s``: ``basis.T @ A @ basis``."""
    a = as_matrix(a)
    if a.shape != (s.ambient_dim, s.ambient_dim):
        raise AmbientMismatch(f"operator is {a.shape[0]}x{a.shape[1]}, subspace lives in R^{s.ambient_dim}")
    r = s.basis.T @ a @ s.basis
    return 0.5 * (r + r.T)


def _order_key(s):
    return (s.dim, s.basis.tobytes())


def principal_angles(x, y):
    """Principal angles between ``x`` and ``y``.

    Cosines come from the SVD of the basis cross-Gram matrix, sines from the
    SVD of the component of the smaller basis orthogonal to the other
    subspace. Each direction keeps whichever of the two is better
    conditioned (sine below pi/4, cosine above) and the other is recomputed
    from it. Arguments are put in a canonical order first, so the result is
    bitwise symmetric in ``x`` and ``y``.
    """
    _same_ambient(x, y)
    a, b = (x, y) if _order_key(x) <= _order_key(y) else (y, x)
    m = a.dim
    cos = np.clip(singvals(a.basis.T @ b.basis)[:m], 0.0, 1.0)
    resid = a.basis - b.basis @ (b.basis.T @ a.basis)
    resid -= b.basis @ (b.basis.T @ resid)
    sin = np.clip(singvals(resid)[::-1], 0.0, 1.0)
    use_sine = sin < cos
    cos = np.where(use_sine, np.sqrt(np.clip(1.0 - sin * sin, 0.0, 1.0)), cos)
    sin = np.where(use_sine, sin, np.sqrt(np.clip(1.0 - cos * cos, 0.0, 1.0)))
    angles = np.arctan2(sin, cos)
    order = np.argsort(angles, kind="stable")
    return AngleSet(angles[order], cos[order], sin[order])


def projector_difference_singvals(x, y):
    """``S(P_X - P_Y)`` against its angle-based description.

    The prediction is ``|dim X - dim Y|`` ones, then every sine of the
    principal angles twice (sorted nonincreasing), then zeros.
    """
    _same_ambient(x, y)
    measured = singvals(projector(x) - projector(y))
    sines = principal_angles(x, y).sines
    extra = abs(x.dim - y.dim)
    predicted = np.concatenate([np.ones(extra), np.sort(np.concatenate([sines, sines]))[::-1]])
    size = max(measured.size, predicted.size)
    measured = pad(measured, size)
    predicted = pad(predicted, size)
    return ProjectorDifferenceReport(measured, predicted, float(np.max(np.abs(measured - predicted))))


def _pad_pair(left, right):
    size = max(left.size, right.size)
    return pad(left, size), pad(right, size)


def complement_angle_identity(x, y):
    """Both sides of the complement relation for ``Θ(X, Y)`` and ``Θ(X, Y⊥)``.

    Left: ``max(dim X - dim Y, 0)`` copies of pi/2 followed by ``Θ(X, Y)``
    sorted nonincreasing. Right: ``pi/2 - Θ(X, Y⊥)``. Zero-padded to equal
    length.
    """
    theta = principal_angles(x, y).angles
    theta_perp = principal_angles(x, complement(y)).angles
    left = np.concatenate([np.full(max(x.dim - y.dim, 0), HALF_PI), theta[::-1]])
    right = HALF_PI - theta_perp
    return _pad_pair(left, right)


def complements_angle_identity(x, y):
    """``Θ(X, Y)`` and ``Θ(X⊥, Y⊥)``, each sorted nonincreasing and zero-padded."""
    theta = principal_angles(x, y).angles[::-1]
    theta_perp = principal_angles(complement(x), complement(y)).angles[::-1]
    return _pad_pair(theta, theta_perp)


def restricted_product_spectrum(x, y):
    """Eigenvalues of ``(P_X P_Y)|_X`` next to ``[cos^2 Θ(X, Y), 0, ...]``."""
    _same_ambient(x, y)
    values = sym_eig(restriction(projector(y), x)).values
    cos2 = principal_angles(x, y).cosines ** 2
    predicted = pad(cos2, x.dim)
    return values, predicted
