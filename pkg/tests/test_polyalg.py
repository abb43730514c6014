"""Polynomial ring, exact calculus, the |t-x| kernel, and kink functions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare_sharp.polyalg import (
    ONE,
    T,
    ZERO,
    KinkFunction,
    Polynomial,
    abs_kernel_integral,
    coeff_strings,
    definite_integral,
    monomial,
    poly,
    poly_eval,
    poly_from_strings,
)

# P_2 and P_3 written out; used as concrete integral fixtures
P2 = poly([Fraction(-1, 2), 0, Fraction(3, 2)])
P3 = poly([0, Fraction(-3, 2), 0, Fraction(5, 2)])

small_fractions = st.fractions(min_value=-8, max_value=8, max_denominator=16)
polynomials = st.lists(small_fractions, max_size=6).map(poly)


class TestCanonicalForm:
    def test_trailing_zeros_stripped(self):
        assert poly([1, 2, 0, 0]) == poly([1, 2])

    def test_zero_polynomial_is_empty(self):
        assert poly([0, 0]) == ZERO
        assert ZERO.coeffs == ()
        assert ZERO.degree == -1

    def test_degree(self):
        assert poly([5]).degree == 0
        assert P3.degree == 3

    def test_int_coefficients_coerced(self):
        assert poly([1, 2]).coeffs == (Fraction(1), Fraction(2))

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            poly([0.5])


class TestEvaluation:
    def test_zero_poly(self):
        assert ZERO(Fraction(3, 7)) == 0

    def test_p2_at_zero(self):
        assert poly_eval(P2, 0) == Fraction(-1, 2)

    def test_p2_at_one(self):
        assert poly_eval(P2, 1) == 1

    @given(polynomials, small_fractions)
    def test_matches_naive_sum(self, p, x):
        naive = sum(c * x**k for k, c in enumerate(p.coeffs))
        assert p(x) == naive


class TestRingAxioms:
    @given(polynomials, polynomials, polynomials)
    def test_add_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(polynomials, polynomials)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(polynomials, polynomials, polynomials)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polynomials)
    def test_additive_inverse(self, a):
        assert a - a == ZERO
        assert a + (-a) == ZERO

    @given(polynomials, polynomials)
    def test_degree_additivity_nonzero(self, a, b):
        if a != ZERO and b != ZERO:
            assert (a * b).degree == a.degree + b.degree

    def test_scalar_ops(self):
        assert 2 * T == poly([0, 2])
        assert T * 2 == poly([0, 2])
        assert 1 - T == poly([1, -1])
        assert (T + 1) / 2 == poly([Fraction(1, 2), Fraction(1, 2)])

    def test_power(self):
        assert (T + 1) ** 2 == poly([1, 2, 1])
        assert T**0 == ONE
        with pytest.raises(ValueError):
            T ** (-1)


class TestCalculus:
    def test_derivative_of_cube(self):
        assert monomial(3).derivative() == poly([0, 0, 3])

    def test_antiderivative_of_square(self):
        assert poly([0, 0, 3]).antiderivative() == monomial(3)

    def test_p_low_second_derivative(self):
        p_low2 = ((T * T - 1) ** 2) / 8
        assert p_low2.derivative().derivative() == P2

    @given(polynomials)
    def test_derivative_undoes_antiderivative(self, p):
        assert p.antiderivative().derivative() == p

    @given(polynomials, small_fractions, small_fractions)
    def test_fundamental_theorem(self, p, a, b):
        anti = p.antiderivative()
        assert definite_integral(p, a, b) == anti(b) - anti(a)

    def test_reflected(self):
        assert P3.reflected() == -P3
        assert P2.reflected() == P2


class TestDefiniteIntegrals:
    def test_p2_squared_norm(self):
        assert definite_integral(P2 * P2, -1, 1) == Fraction(2, 5)

    def test_p3_derivative_norm(self):
        d = P3.derivative()
        assert definite_integral(d * d, -1, 1) == 12

    def test_mixed_derivative_orthogonality(self):
        assert definite_integral(P2.derivative() * P3.derivative(), -1, 1) == 0


class TestAbsKernel:
    def test_constant_weight(self):
        assert abs_kernel_integral(ONE, Fraction(1, 2)) == Fraction(5, 4)

    def test_linear_weight(self):
        assert abs_kernel_integral(T, Fraction(1, 2)) == Fraction(-11, 24)

    @given(st.fractions(min_value=-1, max_value=1, max_denominator=64))
    def test_p2_closed_form(self, x):
        expected = (x * x - 1) ** 2 / Fraction(4)
        assert abs_kernel_integral(P2, x) == expected

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            abs_kernel_integral(ONE, Fraction(3, 2))

    @given(polynomials, st.fractions(min_value=-1, max_value=1, max_denominator=32))
    def test_matches_split_integration(self, p, x):
        below = definite_integral(p * (x - T), -1, x)
        above = definite_integral(p * (T - x), x, 1)
        assert abs_kernel_integral(p, x) == below + above


class TestSerialization:
    def test_coeff_strings(self):
        assert coeff_strings(P2) == ["-1/2", "0/1", "3/2"]

    @given(polynomials)
    def test_round_trip(self, p):
        assert poly_from_strings(coeff_strings(p)) == p


class TestKinkFunction:
    def make(self, kink=Fraction(1, 3), slope=2):
        # base(t) + slope*|t - kink| with base = t^2
        base = T * T
        return KinkFunction(
            kink=kink,
            left=base - slope * (T - kink),
            right=base + slope * (T - kink),
        )

    def test_continuity_enforced(self):
        with pytest.raises(ValueError):
            KinkFunction(kink=Fraction(0), left=ONE, right=ONE + T + 1)

    def test_kink_must_be_interior(self):
        with pytest.raises(ValueError):
            KinkFunction(kink=Fraction(1), left=ONE, right=ONE)

    def test_evaluation_selects_piece(self):
        f = self.make()
        assert f(Fraction(1, 3)) == Fraction(1, 9)
        assert f(0) == Fraction(2, 3)
        assert f(1) == 1 + 2 * Fraction(2, 3)

    def test_moment_matches_manual_split(self):
        f = self.make()
        k = 2
        manual = definite_integral(monomial(k) * f.left, -1, f.kink) + definite_integral(
            monomial(k) * f.right, f.kink, 1
        )
        assert f.moment(k) == manual

    def test_weighted_integral_linearity(self):
        f = self.make()
        w1, w2 = P2, P3
        assert f.weighted_integral(w1 + w2) == f.weighted_integral(w1) + f.weighted_integral(w2)
