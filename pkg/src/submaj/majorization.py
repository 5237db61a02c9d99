"""Weak majorization ``x ≺w y`` with prefix margins."""

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import InputError, LengthMismatch, NonFiniteEntry

__all__ = ["OrderedVector", "MajorizationReport", "sort_desc", "weak_majorizes", "abs_diff", "pad"]


@dataclass(frozen=True)
class OrderedVector:
    values: np.ndarray
    original_length: int


@dataclass(frozen=True)
class MajorizationReport:
    """Outcome of ``x ≺w y``.

    ``margins[k]`` is the (k+1)-th prefix sum of sorted ``y`` minus that of
    sorted ``x``; the relation holds when no margin is below ``-tolerance_used``.
    """

    holds: bool
    margins: np.ndarray
    worst_k: int
    tolerance_used: float

    @property
    def worst_margin(self):
        return float(self.margins[self.worst_k]) if self.margins.size else 0.0


def _vector(x, name):
    v = np.asarray(x, dtype=float).ravel()
    if not np.all(np.isfinite(v)):
        raise NonFiniteEntry(f"{name} has NaN or infinite entries")
    return v


def sort_desc(x):
    v = _vector(x, "x")
    order = np.argsort(-v, kind="stable")
    return OrderedVector(v[order], v.size)


def pad(x, n):
    """Append zeros to ``x`` up to length ``n``."""
    x = np.asarray(x, dtype=float)
    if x.size >= n:
        return x
    return np.concatenate([x, np.zeros(n - x.size)])


def weak_majorizes(y, x, tol=None):
    """Report whether ``y`` weakly majorizes ``x``.

    Both vectors are sorted nonincreasing and the shorter one is padded with
    zeros. ``tol=None`` picks the library default,
    ``1e-8 * max(1, ||y||_inf) * n``.
    """
    yv = _vector(y, "y")
    xv = _vector(x, "x")
    n = max(xv.size, yv.size)
    if tol is None:
        tol = TOL.majorization_tol(yv, n)
    if tol < 0:
        raise InputError(f"tolerance must be nonnegative, got {tol}")
    ys = pad(sort_desc(yv).values, n)
    xs = pad(sort_desc(xv).values, n)
    margins = np.cumsum(ys) - np.cumsum(xs)
    if n == 0:
        return MajorizationReport(True, margins, 0, float(tol))
    worst = int(np.argmin(margins))
    return MajorizationReport(bool(margins[worst] >= -tol), margins, worst, float(tol))


def abs_diff(x, y):
    xv = _vector(x, "x")
    yv = _vector(y, "y")
    if xv.size != yv.size:
        raise LengthMismatch(f"lengths differ: {xv.size} vs {yv.size}")
    return np.abs(xv - yv)
