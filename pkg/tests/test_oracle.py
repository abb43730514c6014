"""Finite-element oracle: feasibility, accuracy, convergence, kernel backends."""

import math
from fractions import Fraction

import numpy as np
import pytest

from poincare_sharp import kernels, oracle
from poincare_sharp.oracle import (
    NumericalFailure,
    assemble_system,
    convergence_rates,
    fem_solve,
    grid_points,
)
from poincare_sharp.polyalg import definite_integral, monomial, poly
from poincare_sharp.sharp import solve_interior
from poincare_sharp import _kernels_numpy


class TestGrid:
    def test_existing_node_not_duplicated(self):
        grid = grid_points(5, 0.0)
        assert grid.shape == (5,)
        assert 0.0 in grid

    def test_off_grid_point_inserted(self):
        grid = grid_points(5, 0.3)
        assert grid.shape == (6,)
        assert 0.3 in grid
        assert np.all(np.diff(grid) > 0)

    def test_near_node_snaps(self):
        grid = grid_points(5, 0.5 + 1e-14)
        assert grid.shape == (5,)


class TestValidation:
    def test_bad_order(self):
        with pytest.raises(ValueError):
            fem_solve(0, 0.0, 64)

    @pytest.mark.parametrize("x", [-1.0, 1.0, 1.5])
    def test_bad_point(self, x):
        with pytest.raises(ValueError):
            fem_solve(1, x, 64)

    def test_too_few_nodes(self):
        with pytest.raises(ValueError):
            fem_solve(3, 0.0, 5)

    def test_minimal_grid_is_feasible(self):
        result = fem_solve(1, 0.0, 4)
        assert result.max_residual <= 1e-9


class TestAccuracy:
    def test_m1_center(self):
        result = fem_solve(1, 0.0, 513)
        exact = math.sqrt(1 / 6)
        assert abs(result.b_estimate - exact) / exact <= 1e-3
        assert result.b_estimate <= exact + 1e-12

    def test_m2_half(self):
        result = fem_solve(2, 0.5, 513)
        exact = math.sqrt(97 / 1024)
        assert abs(result.b_estimate - exact) / exact <= 1e-3

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("x", [0.0, 0.5, -0.5])
    def test_upper_bound_property(self, m, x):
        result = fem_solve(m, x, 257)
        exact_energy = float(1 / solve_interior(m, Fraction(x)).Bsq)
        assert result.energy >= exact_energy - 1e-12 * result.energy
        assert result.max_residual <= 1e-9

    def test_reflection_symmetry(self):
        a = fem_solve(2, 0.3, 129)
        b = fem_solve(2, -0.3, 129)
        assert abs(a.b_estimate - b.b_estimate) <= 1e-10

    def test_diagnostics_populated(self):
        result = fem_solve(2, 0.25, 65)
        assert result.condition_hint > 1.0
        assert math.isfinite(result.condition_hint)
        assert len(result.constraint_residuals) == 3


class TestConvergence:
    def test_energies_decrease_toward_exact(self):
        rows = convergence_rates(1, 0.0, [33, 65, 129, 257])
        energies = [r.energy for r in rows]
        assert all(b < a for a, b in zip(energies, energies[1:]))
        errors = [e - 6.0 for e in energies]
        assert all(e > 0 for e in errors)
        orders = [math.log(errors[i] / errors[i + 1]) / math.log(2) for i in range(len(errors) - 1)]
        assert all(o >= 1.8 for o in orders)

    def test_single_entry(self):
        rows = convergence_rates(1, 0.0, [4])
        assert len(rows) == 1

    def test_counts_must_increase(self):
        with pytest.raises(ValueError):
            convergence_rates(1, 0.0, [64, 64])
        with pytest.raises(ValueError):
            convergence_rates(1, 0.0, [128, 64])


def exact_hat_rows(grid, m):
    """Independent exact recomputation of the moment-constraint rows."""
    n = len(grid)
    rows = [[Fraction(0)] * n for _ in range(m)]
    for e in range(n - 1):
        a, b = grid[e], grid[e + 1]
        h = b - a
        falling = poly([b, -1]) / h
        rising = poly([-a, 1]) / h
        for k in range(m):
            rows[k][e] += definite_integral(monomial(k) * falling, a, b)
            rows[k][e + 1] += definite_integral(monomial(k) * rising, a, b)
    return rows


class TestKernels:
    # dyadic rationals convert to float exactly, so the comparison is clean
    DYADIC_GRID = [Fraction(-1), Fraction(-1, 2), Fraction(-1, 8), Fraction(1, 4), Fraction(5, 8), Fraction(1)]

    def test_hat_rows_match_exact_integration(self):
        grid = np.array([float(g) for g in self.DYADIC_GRID])
        got = kernels.hat_moment_rows(grid, 4)
        want = exact_hat_rows(self.DYADIC_GRID, 4)
        for k in range(4):
            for i in range(len(grid)):
                assert got[k, i] == pytest.approx(float(want[k][i]), abs=1e-14)

    def test_hat_rows_integrate_constants(self):
        # row k dotted with nodal values of t^j equals the exact integral of t^(k+j)
        grid = np.linspace(-1.0, 1.0, 17)
        rows = kernels.hat_moment_rows(grid, 3)
        ones = np.ones_like(grid)
        assert rows[0] @ ones == pytest.approx(2.0, abs=1e-14)
        assert rows[1] @ ones == pytest.approx(0.0, abs=1e-14)
        # t is reproduced exactly by its nodal interpolant
        assert rows[0] @ grid == pytest.approx(0.0, abs=1e-14)
        assert rows[1] @ grid == pytest.approx(2 / 3, abs=1e-10)

    def test_lu_matches_numpy_solver(self):
        kkt, rhs, _, _ = assemble_system(2, 0.25, 33)
        got, piv_min, piv_max = kernels.lu_solve(kkt, rhs)
        want = np.linalg.solve(kkt, rhs)
        assert np.allclose(got, want, rtol=1e-8, atol=1e-10)
        assert 0 < piv_min <= piv_max

    def test_lu_singular_reports_zero_pivot(self):
        singular = np.array([[1.0, 2.0], [2.0, 4.0]])
        _, piv_min, _ = _kernels_numpy.lu_solve(singular, np.array([1.0, 2.0]))
        assert piv_min == 0.0

    def test_backends_agree(self):
        numba_impl = pytest.importorskip("poincare_sharp._kernels_numba")
        kkt, rhs, _, grid = assemble_system(3, 0.4, 65)
        rows_np = _kernels_numpy.hat_moment_rows(grid, 3)
        rows_nb = numba_impl.hat_moment_rows(grid, 3)
        assert np.allclose(rows_np, rows_nb, rtol=0, atol=1e-15)
        x_np, lo_np, hi_np = _kernels_numpy.lu_solve(kkt, rhs)
        x_nb, lo_nb, hi_nb = numba_impl.lu_solve(kkt, rhs)
        assert np.allclose(x_np, x_nb, rtol=1e-9, atol=1e-12)
        assert lo_np == pytest.approx(lo_nb, rel=1e-12)
        assert hi_np == pytest.approx(hi_nb, rel=1e-12)

    def test_numba_singular_reports_zero_pivot(self):
        numba_impl = pytest.importorskip("poincare_sharp._kernels_numba")
        singular = np.array([[1.0, 2.0], [2.0, 4.0]])
        _, piv_min, _ = numba_impl.lu_solve(singular, np.array([1.0, 2.0]))
        assert piv_min == 0.0


class TestNumericalFailure:
    def test_singular_system_raises(self, monkeypatch):
        def broken(a, b):
            return np.full(b.shape, np.nan), 0.0, 0.0

        monkeypatch.setattr(kernels, "lu_solve", broken)
        with pytest.raises(NumericalFailure) as info:
            fem_solve(1, 0.0, 8)
        assert info.value.condition_hint == float("inf")

    def test_exception_type(self):
        err = NumericalFailure("boom", condition_hint=12.5)
        assert isinstance(err, RuntimeError)
        assert err.condition_hint == 12.5


def test_backend_name_is_known():
    assert oracle.kernels.backend_name in ("numba", "numpy")
