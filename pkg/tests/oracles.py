"""Independent reference computations used only by the tests.

Nothing here calls into ``submaj``: eigenvalues come from Householder
tridiagonalization plus Sturm-sequence bisection.
"""

import numpy as np


def householder_tridiagonal(a):
    """Diagonal and off-diagonal of an orthogonally similar tridiagonal matrix."""
    t = np.array(a, dtype=float)
    n = t.shape[0]
    for k in range(n - 2):
        x = t[k + 1:, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        vn = np.linalg.norm(v)
        if vn == 0.0:
            continue
        v /= vn
        h = np.eye(n)
        h[k + 1:, k + 1:] -= 2.0 * np.outer(v, v)
        t = h @ t @ h
    return np.diag(t).copy(), np.diag(t, 1).copy()


def sturm_count(d, e, x):
    """Number of eigenvalues of the tridiagonal (d, e) strictly below ``x``."""
    count = 0
    q = d[0] - x
    if q < 0:
        count += 1
    for i in range(1, d.size):
        if q == 0.0:
            q = 1e-300
        q = d[i] - x - e[i - 1] ** 2 / q
        if q < 0:
            count += 1
    return count


def bisection_eigenvalues(a, rel_tol=1e-15):
    """All eigenvalues of symmetric ``a`` in nonincreasing order."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a[0].copy()
    d, e = householder_tridiagonal(0.5 * (a + a.T))
    radius = np.abs(np.concatenate([e, [0.0]])) + np.abs(np.concatenate([[0.0], e]))
    lo = float(np.min(d - radius)) - 1e-12
    hi = float(np.max(d + radius)) + 1e-12
    width = max(hi - lo, 1e-300)
    values = np.empty(n)
    for k in range(n):
        # k-th smallest: smallest x with count(x) > k
        left, right = lo, hi
        while right - left > rel_tol * width:
            mid = 0.5 * (left + right)
            if sturm_count(d, e, mid) > k:
                right = mid
            else:
                left = mid
            if mid in (left, right) and right - left <= 4 * np.finfo(float).eps * max(abs(left), abs(right), 1e-300):
                break
        values[k] = 0.5 * (left + right)
    return values[::-1]


def random_symmetric_raw(rng, n, scale=1.0):
    a = scale * rng.standard_normal((n, n))
    return 0.5 * (a + a.T)


def gaussian_orthonormal(rng, n, k):
    """Orthonormal basis via numpy's QR; used only to build test inputs."""
    q, r = np.linalg.qr(rng.standard_normal((n, k)))
    return q * np.sign(np.diag(r))
