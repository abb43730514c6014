"""Pure-NumPy fallback kernels (vectorized; same algorithms as the jitted path)."""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def hat_moment_rows(grid: np.ndarray, m: int) -> np.ndarray:
    """Rows A[k, i] = exact integral of t^k * hat_i(t), assembled per element.

    On element [a, b] with h = b - a the two hat restrictions are (b - t)/h
    and (t - a)/h; against t^k they integrate in closed form through the
    power antiderivatives (b^{k+1} - a^{k+1})/(k+1) and (b^{k+2} - a^{k+2})/(k+2).
    """
    n = grid.shape[0]
    a = grid[:-1]
    b = grid[1:]
    h = b - a
    rows = np.zeros((m, n))
    for k in range(m):
        p1 = (b ** (k + 1) - a ** (k + 1)) / (k + 1)
        p2 = (b ** (k + 2) - a ** (k + 2)) / (k + 2)
        rows[k, :-1] += (b * p1 - p2) / h
        rows[k, 1:] += (p2 - a * p1) / h
    return rows


def lu_solve(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Solve a x = b by LU with partial pivoting; also return (min, max) |pivot|.

    A zero pivot column signals a singular matrix: the returned min pivot is
    0.0 and the solution is NaN. Pivot choice is first-index-of-maximum so
    both backends eliminate in the same order.
    """
    a = np.array(a, dtype=np.float64)
    b = np.array(b, dtype=np.float64)
    n = a.shape[0]
    piv_min = np.inf
    piv_max = 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        pivot = abs(a[p, k])
        if pivot == 0.0:
            return np.full(n, np.nan), 0.0, piv_max
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[k], b[p] = b[p], b[k]
        piv_min = min(piv_min, pivot)
        piv_max = max(piv_max, pivot)
        if k < n - 1:
            mult = a[k + 1 :, k] / a[k, k]
            a[k + 1 :, k + 1 :] -= np.outer(mult, a[k, k + 1 :])
            b[k + 1 :] -= mult * b[k]
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        x[i] = (b[i] - a[i, i + 1 :] @ x[i + 1 :]) / a[i, i]
    return x, float(piv_min), float(piv_max)
