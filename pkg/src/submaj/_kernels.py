"""Numba-compiled Jacobi kernels.

Both kernels work in place on a private copy supplied by the caller and
return a convergence flag instead of raising; error policy lives in
:mod:`submaj.linalg`.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _rotation(theta):
    # smaller root of t^2 + 2*theta*t - 1 = 0, overflow-safe
    if theta == 0.0:
        return 1.0
    at = abs(theta)
    if at > 1e150:
        t = 0.5 / at
    else:
        t = 1.0 / (at + np.sqrt(at * at + 1.0))
    return t if theta > 0.0 else -t


@njit(cache=True)
def jacobi_eigh(a, rel_tol, max_sweeps):
    """Cyclic-by-row Jacobi on symmetric ``a``.

    Returns ``(diag, vectors, converged, sweeps)``.
    """
    n = a.shape[0]
    v = np.eye(n)
    fro = np.sqrt(np.sum(a * a))
    target = rel_tol * fro
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += a[p, q] * a[p, q]
        if np.sqrt(off) <= target:
            d = np.empty(n)
            for i in range(n):
                d[i] = a[i, i]
            return d, v, True, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                t = _rotation((a[q, q] - a[p, p]) / (2.0 * apq))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    d = np.empty(n)
    for i in range(n):
        d[i] = a[i, i]
    return d, v, False, max_sweeps


@njit(cache=True)
def one_sided_jacobi(u, rel_tol, floor, max_sweeps):
    """Hestenes one-sided Jacobi on the columns of ``u`` (rows >= cols).

    On return the columns of ``u`` are mutually orthogonal and equal
    ``A @ v``. Columns with norm at most ``floor`` are rounding residue
    and are left alone: rotating them only shrinks them further until the
    squared norm underflows to zero while the inner product does not, and
    the relative test can then never be met. Returns
    ``(u, v, converged, sweeps)``.
    """
    m, n = u.shape
    v = np.eye(n)
    floor2 = floor * floor
    for sweep in range(max_sweeps):
        rotated = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for k in range(m):
                    alpha += u[k, i] * u[k, i]
                    beta += u[k, j] * u[k, j]
                    gamma += u[k, i] * u[k, j]
                if gamma == 0.0 or abs(gamma) <= rel_tol * np.sqrt(alpha * beta):
                    continue
                if alpha <= floor2 or beta <= floor2:
                    continue
                rotated = True
                t = _rotation((beta - alpha) / (2.0 * gamma))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(m):
                    uki = u[k, i]
                    ukj = u[k, j]
                    u[k, i] = c * uki - s * ukj
                    u[k, j] = s * uki + c * ukj
                for k in range(n):
                    vki = v[k, i]
                    vkj = v[k, j]
                    v[k, i] = c * vki - s * vkj
                    v[k, j] = s * vki + c * vkj
        if not rotated:
            return u, v, True, sweep
    return u, v, False, max_sweeps
