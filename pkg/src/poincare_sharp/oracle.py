"""Brute-force floating-point verification of the minimal-energy problem.

The sharp constant can be restated variationally: over all y with the m
vanishing moments and y(x) = 1, minimize the energy integral of y'^2; the
best constant is the inverse square root of that minimum. This module
solves the restated problem head-on with continuous piecewise-linear
finite elements and an equality-constrained quadratic minimization, on
purpose knowing nothing about the exact construction: it is the
independent route the exact results are checked against.

Because a piecewise-linear space is a strict subspace of the admissible
set, the computed energy always sits at or above the true minimum, so
``b_estimate`` approaches the exact constant from below. The kink point x
is forced onto the grid (the true minimizer has its derivative jump
exactly there), which restores clean second-order energy convergence.

Hot numerics (constraint assembly and the dense partial-pivot solve of the
stationarity system) live in ``kernels`` with jitted and pure-NumPy
backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels

_ON_GRID_TOL = 1e-12


class NumericalFailure(RuntimeError):
    """The stationarity system could not be solved; carries the pivot-ratio hint."""

    def __init__(self, message: str, condition_hint: float):
        super().__init__(message)
        self.condition_hint = condition_hint


@dataclass(frozen=True)
class OracleResult:
    """One discretized solve: energy estimate, derived constant, and diagnostics."""

    m: int
    x: float
    nodes: int
    energy: float
    b_estimate: float
    constraint_residuals: tuple[float, ...]
    condition_hint: float

    @property
    def max_residual(self) -> float:
        return max(self.constraint_residuals)


@dataclass(frozen=True)
class ConvergenceRow:
    nodes: int
    energy: float
    b_estimate: float


def grid_points(nodes: int, x: float) -> np.ndarray:
    """Uniform grid of ``nodes`` points on [-1, 1], with x inserted unless it
    already lies within 1e-12 of an existing node."""
    grid = np.linspace(-1.0, 1.0, nodes)
    if np.min(np.abs(grid - x)) > _ON_GRID_TOL:
        grid = np.sort(np.append(grid, x))
    return grid


def _validate(m: int, x: float, nodes: int) -> float:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"moment order m must be an integer >= 1, got {m!r}")
    x = float(x)
    if not -1.0 < x < 1.0:
        raise ValueError(f"x must lie strictly inside (-1, 1), got {x}")
    if nodes < m + 3:
        raise ValueError(f"need at least m + 3 = {m + 3} nodes, got {nodes}")
    return x


def assemble_system(m: int, x: float, nodes: int):
    """Build the dense stationarity system of the discrete minimization.

    Returns (kkt, rhs, constraints, grid): the (n+m+1) x (n+m+1) saddle
    matrix [[2K, A^T], [A, 0]], its right-hand side, the constraint rows A
    (m exact moment rows plus the point row), and the grid. Exposed so
    benchmarks and cross-checks can drive the kernels on the real workload.
    """
    x = _validate(m, x, nodes)
    grid = grid_points(nodes, x)
    n = grid.shape[0]
    w = 1.0 / np.diff(grid)

    stiff = np.zeros((n, n))
    idx = np.arange(n - 1)
    stiff[idx, idx] += w
    stiff[idx + 1, idx + 1] += w
    stiff[idx, idx + 1] -= w
    stiff[idx + 1, idx] -= w

    constraints = np.zeros((m + 1, n))
    constraints[:m] = kernels.hat_moment_rows(grid, m)
    point_index = int(np.argmin(np.abs(grid - x)))
    constraints[m, point_index] = 1.0

    size = n + m + 1
    kkt = np.zeros((size, size))
    kkt[:n, :n] = 2.0 * stiff
    kkt[:n, n:] = constraints.T
    kkt[n:, :n] = constraints
    rhs = np.zeros(size)
    rhs[n + m] = 1.0
    return kkt, rhs, constraints, grid


def fem_solve(m: int, x: float, nodes: int) -> OracleResult:
    """Minimize the discrete energy under the m moment constraints and y(x) = 1.

    Assembles the exact tridiagonal energy form sum (y_{i+1} - y_i)^2 / h_i,
    the exact per-element moment rows, and the point constraint, then solves
    the stationarity (KKT) system of the equality-constrained quadratic
    program densely with partial pivoting.

    Raises NumericalFailure if the system is singular.
    """
    kkt, rhs, constraints, grid = assemble_system(m, x, nodes)
    n = grid.shape[0]

    solution, piv_min, piv_max = kernels.lu_solve(kkt, rhs)
    if piv_min == 0.0:
        raise NumericalFailure(
            f"singular stationarity system at m={m}, x={x}, nodes={nodes}",
            condition_hint=float("inf"),
        )
    y = solution[:n]
    w = 1.0 / np.diff(grid)
    energy = float(np.sum((np.diff(y) ** 2) * w))
    residuals = tuple(float(r) for r in np.abs(constraints @ y - rhs[n:]))
    return OracleResult(
        m=m,
        x=float(x),
        nodes=nodes,
        energy=energy,
        b_estimate=float(energy ** -0.5),
        constraint_residuals=residuals,
        condition_hint=float(piv_max / piv_min),
    )


def convergence_rates(m: int, x: float, node_counts: Sequence[int]) -> list[ConvergenceRow]:
    """Run fem_solve over increasing node counts; on nested dyadic grids the
    energies are non-increasing and the energy error shrinks at second order."""
    counts = list(node_counts)
    if any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError(f"node counts must be strictly increasing, got {counts}")
    rows = []
    for nodes in counts:
        result = fem_solve(m, x, nodes)
        rows.append(ConvergenceRow(nodes=nodes, energy=result.energy, b_estimate=result.b_estimate))
    return rows
