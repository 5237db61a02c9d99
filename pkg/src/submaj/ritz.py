"""Rayleigh-Ritz values, spectrum normalization and projector dilation.

The Ritz perturbation check compares Ritz values on two trial subspaces of
equal dimension against ``spread * sin Θ(X, Y)``.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL, Tolerances
from .errors import AmbientMismatch, DimMismatch, SpectrumOutOfUnitInterval, ZeroSpread
from .linalg import as_matrix, sym_eig, symmetrized
from .majorization import MajorizationReport, abs_diff, weak_majorizes
from .subspaces import Subspace, principal_angles, restriction, subspace_sum

__all__ = [
    "RitzSet",
    "Dilation",
    "RitzCheck",
    "ritz_values",
    "spread",
    "local_spread",
    "normalize_spectrum",
    "dilate_to_projector",
    "dilation_range",
    "embed_trial",
    "ritz_perturbation_check",
]


@dataclass(frozen=True, eq=False)
class RitzSet:
    values: np.ndarray

    @property
    def trial_dim(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class Dilation:
    """Orthogonal projector on R^{2n} whose upper-left block is ``scale * (A - shift I)``."""

    original_dim: int
    projector_matrix: np.ndarray
    shift: float = 0.0
    scale: float = 1.0

    @property
    def upper_left(self):
        n = self.original_dim
        return self.projector_matrix[:n, :n]

    def idempotency_residual(self):
        p = self.projector_matrix
        return float(np.max(np.abs(p @ p - p)))


@dataclass(frozen=True, eq=False)
class RitzCheck:
    """Both sides of the Ritz-value perturbation bound.

    ``lhs`` is ``|Λ_X - Λ_Y|`` on the sorted Ritz vectors and ``rhs`` is
    ``spread * sin Θ(X, Y)``; both are stored sorted nonincreasing.
    ``full_sum_holds`` and ``max_gap_holds`` are the k=m and k=1 consequences.
    """

    ritz_x: np.ndarray
    ritz_y: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    spread: float
    local: bool
    report: MajorizationReport
    full_sum_holds: bool
    max_gap_holds: bool

    @property
    def holds(self):
        return self.report.holds


def ritz_values(a, x: Subspace, tol: Tolerances = TOL):
    a = as_matrix(a)
    if a.shape[0] != x.ambient_dim:
        raise AmbientMismatch(f"operator is {a.shape[0]}x{a.shape[1]}, trial subspace lives in R^{x.ambient_dim}")
    symmetrized(a, tol, name="operator")
    return RitzSet(sym_eig(restriction(a, x), tol).values)


def spread(a, tol: Tolerances = TOL):
    values = sym_eig(a, tol).values
    return float(values[0] - values[-1])


def local_spread(a, x: Subspace, y: Subspace, tol: Tolerances = TOL):
    """Spread of the Rayleigh quotient of ``a`` over the sum ``X + Y``."""
    s = subspace_sum(x, y)
    return spread(restriction(a, s), tol)


def _zero_spread(values):
    width = values[0] - values[-1]
    return width <= 1e-14 * max(1.0, float(np.max(np.abs(values))))


def normalize_spectrum(a, tol: Tolerances = TOL):
    """Shift and scale ``a`` so its spectrum fills [0, 1].

    Returns ``(B, shift, scale)`` with ``B = scale * (A - shift * I)``.
    """
    a = as_matrix(a)
    values = sym_eig(a, tol).values
    if _zero_spread(values):
        raise ZeroSpread("operator is a multiple of the identity")
    shift = float(values[-1])
    scale = 1.0 / float(values[0] - values[-1])
    b = scale * (a - shift * np.eye(a.shape[0]))
    return 0.5 * (b + b.T), shift, scale


def dilate_to_projector(a, normalize=False, tol: Tolerances = TOL):
    """Block projector ``[[A, R], [R, I - A]]`` with ``R = sqrt(A) sqrt(I - A)``.

    ``a`` must have its spectrum in [0, 1] up to ``psd_tol``; with
    ``normalize=True`` it is first shifted and scaled into that interval.
    """
    a = as_matrix(a)
    shift, scale = 0.0, 1.0
    if normalize:
        a, shift, scale = normalize_spectrum(a, tol)
    eig = sym_eig(a, tol)
    values = eig.values
    slack = tol.psd_tol(a)
    if values[-1] < -slack or values[0] > 1.0 + slack:
        raise SpectrumOutOfUnitInterval(
            f"spectrum [{values[-1]:.6g}, {values[0]:.6g}] is not inside [0, 1]"
        )
    n = a.shape[0]
    a = 0.5 * (a + a.T)
    # sqrt(A) and sqrt(I - A) share eigenvectors, so their product is one function of A
    lam = np.clip(values, 0.0, 1.0)
    r = (eig.vectors * np.sqrt(lam * (1.0 - lam))) @ eig.vectors.T
    r = 0.5 * (r + r.T)
    p = np.block([[a, r], [r, np.eye(n) - a]])
    return Dilation(n, p, shift, scale)


def dilation_range(d: Dilation, tol: Tolerances = TOL):
    """Range of the dilation projector: eigenvectors with eigenvalue >= 1/2."""
    eig = sym_eig(d.projector_matrix, tol)
    keep = eig.values >= 0.5
    return Subspace(eig.vectors[:, keep])


def embed_trial(x: Subspace):
    """``[X; 0]`` inside the doubled space."""
    return Subspace(np.vstack([x.basis, np.zeros_like(x.basis)]))


def ritz_perturbation_check(a, x: Subspace, y: Subspace, use_local_spread=False, tol=None, tolerances: Tolerances = TOL):
    """Check ``|Λ(P_X A|_X) - Λ(P_Y A|_Y)| ≺w spread * sin Θ(X, Y)``.

    ``use_local_spread`` replaces the global spread ``λmax - λmin`` with the
    spread of the Rayleigh quotient over ``X + Y``. A zero spread makes
    both sides identically zero and the check holds trivially.
    """
    a = as_matrix(a)
    if x.dim != y.dim:
        raise DimMismatch(f"trial subspaces differ in dimension: {x.dim} vs {y.dim}")
    if x.ambient_dim != a.shape[0] or y.ambient_dim != a.shape[0]:
        raise AmbientMismatch("trial subspaces and operator live in different spaces")
    ritz_x = ritz_values(a, x, tolerances).values
    ritz_y = ritz_values(a, y, tolerances).values
    lhs = np.sort(abs_diff(ritz_x, ritz_y))[::-1]
    if use_local_spread:
        width = local_spread(a, x, y, tolerances)
    else:
        width = spread(a, tolerances)
    sines = principal_angles(x, y).sines
    if width == 0.0:
        rhs = np.zeros_like(sines)
        m = rhs.size
        report = MajorizationReport(True, np.zeros(m), 0, 0.0 if tol is None else float(tol))
        return RitzCheck(ritz_x, ritz_y, lhs, rhs, 0.0, use_local_spread, report, True, True)
    rhs = width * sines[::-1]
    report = weak_majorizes(rhs, lhs, tol)
    eps = report.tolerance_used
    full_sum = bool(lhs.sum() <= rhs.sum() + eps)
    max_gap = bool(lhs[0] <= width * sines[-1] + eps)
    return RitzCheck(ritz_x, ritz_y, lhs, rhs, width, use_local_spread, report, full_sum, max_gap)
