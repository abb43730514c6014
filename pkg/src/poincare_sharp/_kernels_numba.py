"""Jitted kernels: explicit-loop versions of the NumPy fallbacks in _kernels_numpy.

Compiled lazily on first call and cached on disk. No fastmath: elimination
order and rounding must stay reproducible run to run.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def hat_moment_rows(grid: np.ndarray, m: int) -> np.ndarray:
    n = grid.shape[0]
    rows = np.zeros((m, n))
    for e in range(n - 1):
        a = grid[e]
        b = grid[e + 1]
        h = b - a
        for k in range(m):
            p1 = (b ** (k + 1) - a ** (k + 1)) / (k + 1)
            p2 = (b ** (k + 2) - a ** (k + 2)) / (k + 2)
            rows[k, e] += (b * p1 - p2) / h
            rows[k, e + 1] += (p2 - a * p1) / h
    return rows


@njit(cache=True)
def lu_solve(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, float, float]:
    a = a.copy()
    b = b.copy()
    n = a.shape[0]
    piv_min = np.inf
    piv_max = 0.0
    for k in range(n):
        p = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            cand = abs(a[i, k])
            if cand > best:
                best = cand
                p = i
        if best == 0.0:
            return np.full(n, np.nan), 0.0, piv_max
        if p != k:
            for j in range(n):
                a[k, j], a[p, j] = a[p, j], a[k, j]
            b[k], b[p] = b[p], b[k]
        if best < piv_min:
            piv_min = best
        if best > piv_max:
            piv_max = best
        for i in range(k + 1, n):
            mult = a[i, k] / a[k, k]
            if mult != 0.0:
                for j in range(k + 1, n):
                    a[i, j] -= mult * a[k, j]
                b[i] -= mult * b[k]
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            acc -= a[i, j] * x[j]
        x[i] = acc / a[i, i]
    return x, piv_min, piv_max
