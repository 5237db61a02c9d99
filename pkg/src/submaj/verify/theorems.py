"""Registry of theorem checkers.

Each checker draws one random instance in ambient dimension ``n`` from the
given generator and returns a :class:`Trial`. A trial fails when its
``margin`` is below ``-tol``; equality-type checks report
``limit - deviation`` with ``tol = 0``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from ..config import TOL
from ..graphs import spectra_compare
from ..linalg import eigvals, singvals
from ..majorization import abs_diff, weak_majorizes
from ..ritz import dilate_to_projector, embed_trial, normalize_spectrum, ritz_perturbation_check, ritz_values
from ..subspaces import (
    complement_angle_identity,
    complements_angle_identity,
    principal_angles,
    projector,
    projector_difference_singvals,
    restricted_product_spectrum,
)
from .generators import random_graph_pair, random_partner, random_subspace, random_symmetric


class TheoremId(str, Enum):
    INEQ_1D_ANGLE = "INEQ-1D-ANGLE"
    INEQ_1D_SIN = "INEQ-1D-SIN"
    INEQ_1D_COS = "INEQ-1D-COS"
    INEQ_1D_SQ = "INEQ-1D-SQ"
    THM_2_1 = "THM-2-1"
    COR_2_2 = "COR-2-2"
    THM_2_3_LIDSKII = "THM-2-3-LIDSKII"
    COR_2_4 = "COR-2-4"
    COR_2_5 = "COR-2-5"
    THM_2_6_PINCH = "THM-2-6-PINCH"
    THM_2_7 = "THM-2-7"
    LEM_2_8 = "LEM-2-8"
    THM_2_9 = "THM-2-9"
    THM_3_1_ANGLES = "THM-3-1-ANGLES"
    THM_3_2_SIN = "THM-3-2-SIN"
    THM_3_2_COS = "THM-3-2-COS"
    THM_3_3_SQ = "THM-3-3-SQ"
    THM_4_1_RITZ = "THM-4-1-RITZ"
    COR_4_DILATION = "COR-4-DILATION"
    THM_5_2_GRAPH = "THM-5-2-GRAPH"

    def __str__(self):
        return self.value


STRUCTURE_TOL = 1e-8
DILATION_TOL = 1e-9
LIDSKII_EXHAUSTIVE_MAX_N = 8
LIDSKII_SAMPLES = 200


@dataclass
class Trial:
    margin: float
    tol: float
    instance: dict = field(default_factory=dict)

    @property
    def failed(self):
        return self.margin < -self.tol


def _worst(parts, instance):
    """Pick the (margin, tol) part closest to failing."""
    margin, tol = min(parts, key=lambda p: p[0] + p[1])
    return Trial(float(margin), float(tol), instance)


def _maj(y, x):
    r = weak_majorizes(y, x)
    return r.worst_margin, r.tolerance_used


def _equality(deviation, limit):
    return limit - float(deviation), 0.0


def _equal_dims(n, rng):
    return int(rng.integers(1, n)) if n > 1 else 1


# one-dimensional inequalities

def acute_angle(u, v):
    """Acute angle between nonzero vectors, accurate for nearly parallel inputs."""
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    c = float(u @ v)
    s = float(np.linalg.norm(v - c * u))
    return float(np.arctan2(s, abs(c)))


def _vector_triple(n, rng):
    x, y, z = rng.standard_normal((3, n))
    if rng.integers(3) == 0:
        y = x + 10.0 ** rng.uniform(-8, -1) * rng.standard_normal(n)
    return x, y, z


def one_dim_sides(kind, x, y, z):
    """``(lhs, rhs)`` of the scalar angle inequality ``kind`` for vectors x, y, z."""
    txz, tyz, txy = acute_angle(x, z), acute_angle(y, z), acute_angle(x, y)
    if kind == "angle":
        return abs(txz - tyz), txy
    if kind == "sin":
        return abs(np.sin(txz) - np.sin(tyz)), np.sin(txy)
    if kind == "cos":
        return abs(np.cos(txz) - np.cos(tyz)), np.sin(txy)
    if kind == "sq":
        return abs(np.cos(txz) ** 2 - np.cos(tyz) ** 2), np.sin(txy)
    raise ValueError(kind)


def _one_dim(kind):
    def checker(rng, n):
        x, y, z = _vector_triple(n, rng)
        lhs, rhs = one_dim_sides(kind, x, y, z)
        return Trial(float(rhs - lhs), TOL.majorization_tol([rhs], 1), {"x": x, "y": y, "z": z})
    return checker


# majorization background

def _random_scale(rng):
    return 10.0 ** rng.uniform(-1, 1)


def _sym_pair(n, rng):
    def one():
        lo = rng.uniform(-5, 5)
        return random_symmetric(n, lo, lo + rng.uniform(0.1, 10), rng)
    return one(), one()


def check_eig_sum(rng, n):
    a, b = _sym_pair(n, rng)
    m, t = _maj(eigvals(a) + eigvals(b), eigvals(a + b))
    return Trial(m, t, {"A": a, "B": b})


def check_sing_sum(rng, n):
    a = _random_scale(rng) * rng.standard_normal((n, n))
    b = _random_scale(rng) * rng.standard_normal((n, n))
    bound = singvals(a) + singvals(b)
    parts = [_maj(bound, singvals(a + b)), _maj(bound, singvals(a - b))]
    return _worst(parts, {"A": a, "B": b})


@lru_cache(maxsize=None)
def _all_subsets(n):
    codes = np.arange(1, 2 ** n)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(float)


def _sampled_subsets(n, rng, count):
    masks = np.zeros((count, n))
    for r in range(count):
        k = int(rng.integers(1, n + 1))
        masks[r, rng.choice(n, size=k, replace=False)] = 1.0
    return masks


def lidskii_margins(a, b, masks):
    """``Σ λ_I(A) + Σ_{j<=|I|} λ_j(B) - Σ λ_I(A+B)`` for every index set row of ``masks``."""
    la, lb, lab = eigvals(a), eigvals(b), eigvals(a + b)
    sizes = masks.sum(axis=1).astype(int)
    return masks @ la + np.cumsum(lb)[sizes - 1] - masks @ lab


def check_lidskii(rng, n):
    a, b = _sym_pair(n, rng)
    if n <= LIDSKII_EXHAUSTIVE_MAX_N:
        masks = _all_subsets(n)
    else:
        masks = _sampled_subsets(n, rng, LIDSKII_SAMPLES)
    margins = lidskii_margins(a, b, masks)
    scale = np.max(np.abs(eigvals(a))) + np.max(np.abs(eigvals(b)))
    tol = TOL.majorization_rel * max(1.0, float(scale)) * n
    return Trial(float(np.min(margins)), tol, {"A": a, "B": b})


def check_sing_diff(rng, n):
    a = _random_scale(rng) * rng.standard_normal((n, n))
    b = a + _random_scale(rng) * 10.0 ** rng.uniform(-6, 0) * rng.standard_normal((n, n))
    m, t = _maj(singvals(a - b), abs_diff(singvals(a), singvals(b)))
    return Trial(m, t, {"A": a, "B": b})


def check_eig_diff(rng, n):
    a, b = _sym_pair(n, rng)
    m, t = _maj(singvals(a - b), abs_diff(eigvals(a), eigvals(b)))
    return Trial(m, t, {"A": a, "B": b})


def check_pinching(rng, n):
    a = _random_scale(rng) * rng.standard_normal((n, n))
    k = int(rng.integers(1, n + 1))
    p = projector(random_subspace(n, k, rng))
    q = np.eye(n) - p
    bound = singvals(a)
    parts = [_maj(bound, singvals(p @ a @ p + q @ a @ q)), _maj(bound, singvals(p @ a @ p - q @ a @ q))]
    return _worst(parts, {"A": a, "P": p})


# principal-angle structure

def _unequal_pair(n, rng):
    p = int(rng.integers(1, n))
    q = int(rng.integers(1, n))
    x = random_subspace(n, p, rng)
    return x, random_partner(x, q, rng)


def check_complements(rng, n):
    x, y = _unequal_pair(n, rng)
    dev = 0.0
    for left, right in (complement_angle_identity(x, y), complements_angle_identity(x, y)):
        dev = max(dev, float(np.max(np.abs(left - right))))
    m, t = _equality(dev, STRUCTURE_TOL)
    return Trial(m, t, {"X": x.basis, "Y": y.basis})


def check_restricted_product(rng, n):
    x, y = _unequal_pair(n, rng)
    values, predicted = restricted_product_spectrum(x, y)
    m, t = _equality(np.max(np.abs(values - predicted)), STRUCTURE_TOL)
    return Trial(m, t, {"X": x.basis, "Y": y.basis})


def check_projector_difference(rng, n):
    x, y = _unequal_pair(n, rng)
    m, t = _equality(projector_difference_singvals(x, y).max_deviation, STRUCTURE_TOL)
    return Trial(m, t, {"X": x.basis, "Y": y.basis})


# perturbation of angles

def _triple(n, rng, same_dims=False):
    k = _equal_dims(n, rng)
    r = k if same_dims else _equal_dims(n, rng)
    x = random_subspace(n, k, rng)
    y = random_partner(x, k, rng)
    z = random_partner(x, r, rng) if rng.integers(2) else random_subspace(n, r, rng)
    return x, y, z


def angle_perturbation_sides(kind, x, y, z):
    """``(lhs, rhs)`` vectors for the angle perturbation bound ``kind``."""
    txz, tyz, txy = principal_angles(x, z), principal_angles(y, z), principal_angles(x, y)
    if kind == "angle":
        return abs_diff(txz.angles, tyz.angles), txy.angles
    if kind == "sin":
        return abs_diff(txz.sines, tyz.sines), txy.sines
    if kind == "cos":
        return abs_diff(txz.cosines, tyz.cosines), txy.sines
    if kind == "sq":
        return abs_diff(txz.cosines ** 2, tyz.cosines ** 2), txy.sines
    raise ValueError(kind)


def _angle_perturbation(kind, same_dims=False):
    def checker(rng, n):
        x, y, z = _triple(n, rng, same_dims)
        lhs, rhs = angle_perturbation_sides(kind, x, y, z)
        m, t = _maj(rhs, lhs)
        return Trial(m, t, {"X": x.basis, "Y": y.basis, "Z": z.basis})
    return checker


# Ritz values

def check_ritz(rng, n):
    lo = rng.uniform(-10, 10)
    a = random_symmetric(n, lo, lo + rng.uniform(0.1, 20), rng)
    k = _equal_dims(n, rng)
    x = random_subspace(n, k, rng)
    y = random_partner(x, k, rng)
    parts = []
    for local in (False, True):
        rep = ritz_perturbation_check(a, x, y, use_local_spread=local).report
        parts.append((rep.worst_margin, rep.tolerance_used))
    return _worst(parts, {"A": a, "X": x.basis, "Y": y.basis})


def check_dilation(rng, n):
    lo = rng.uniform(-5, 5)
    a, _, _ = normalize_spectrum(random_symmetric(n, lo, lo + rng.uniform(0.1, 10), rng))
    x = random_subspace(n, int(rng.integers(1, n + 1)), rng)
    d = dilate_to_projector(a)
    dev = np.max(np.abs(ritz_values(a, x).values - ritz_values(d.projector_matrix, embed_trial(x)).values))
    parts = [
        _equality(dev, DILATION_TOL),
        _equality(d.idempotency_residual(), DILATION_TOL),
        _equality(np.max(np.abs(d.upper_left - a)), 1e-10),
    ]
    return _worst(parts, {"A": a, "X": x.basis})


def check_graph(rng, n):
    g1, g2 = random_graph_pair(n, rng)
    rep = spectra_compare(g1, g2)
    parts = [
        (rep.bound - rep.lhs, rep.tolerance_used),
        (rep.sharp_bound - rep.lhs, rep.tolerance_used),
    ]
    return _worst(parts, {"G1": g1, "G2": g2})


REGISTRY = {
    TheoremId.INEQ_1D_ANGLE: _one_dim("angle"),
    TheoremId.INEQ_1D_SIN: _one_dim("sin"),
    TheoremId.INEQ_1D_COS: _one_dim("cos"),
    TheoremId.INEQ_1D_SQ: _one_dim("sq"),
    TheoremId.THM_2_1: check_eig_sum,
    TheoremId.COR_2_2: check_sing_sum,
    TheoremId.THM_2_3_LIDSKII: check_lidskii,
    TheoremId.COR_2_4: check_sing_diff,
    TheoremId.COR_2_5: check_eig_diff,
    TheoremId.THM_2_6_PINCH: check_pinching,
    TheoremId.THM_2_7: check_complements,
    TheoremId.LEM_2_8: check_restricted_product,
    TheoremId.THM_2_9: check_projector_difference,
    TheoremId.THM_3_1_ANGLES: _angle_perturbation("angle", same_dims=True),
    TheoremId.THM_3_2_SIN: _angle_perturbation("sin"),
    TheoremId.THM_3_2_COS: _angle_perturbation("cos"),
    TheoremId.THM_3_3_SQ: _angle_perturbation("sq"),
    TheoremId.THM_4_1_RITZ: check_ritz,
    TheoremId.COR_4_DILATION: check_dilation,
    TheoremId.THM_5_2_GRAPH: check_graph,
}
