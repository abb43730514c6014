"""Sharp constants and extremal functions of the moment-constrained inequality.

For functions y on [-1, 1] whose first m moments vanish
(integral of t^k y(t) dt = 0 for k = 0..m-1), the pointwise value |y(x)| is
bounded by B_m(x) times the L2 norm of y'. This module computes the best
constant and the functions attaining it, exactly.

The extremal function at an interior point x has the form

    y(t) = c(x) * (Q(t) - |t - x|) + 1

where Q is a polynomial of degree m+1. Writing Q in the Legendre basis,
its coefficients of degree 1..m-1 are forced to equal the Legendre
coefficients gamma_k(x) of |t - x| (so the kink's low moments cancel), the
top two coefficients alpha, beta are fixed by the slope conditions
Q'(-1) = -1 and Q'(1) = 1, and the constant term a is fixed by Q(x) = 0.
Then

    c(x) = 2 / (x^2 + 1 - 2 a(x)),      B_m(x)^2 = 1 / (2 c(x)).

Everything here is exact rational arithmetic; B itself is generically
irrational and is only ever reported as B^2 plus a floating square root.

``solve_interior`` runs the construction at one rational x;
``solve_family`` runs the identical pipeline with x left symbolic, giving
B_m^2 as an exact polynomial in x. The endpoint cases x = +-1 have their
own closed forms (``endpoint_constant``, ``endpoint_extremal``), and at
x = 0 a double-factorial formula gives B^2 directly (``bsq_zero_closed``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import as_rational
from .legendre import LegendreTable, double_factorial, shared_table
from .polyalg import ONE, KinkFunction, Polynomial, T, definite_integral


@dataclass(frozen=True)
class SharpSolution:
    """Output of the construction at one (m, x): exact constant and extremal data."""

    m: int
    x: Fraction
    Q: Polynomial
    a: Fraction
    alpha: Fraction
    beta: Fraction
    c: Fraction
    Bsq: Fraction

    @property
    def b_value(self) -> float:
        """B_m(x) as a double (the exact object is Bsq)."""
        return math.sqrt(self.Bsq)


@dataclass(frozen=True)
class SharpFamily:
    """The same construction with x symbolic: coefficients as polynomials in x."""

    m: int
    a_poly: Polynomial
    alpha_poly: Polynomial
    beta_poly: Polynomial
    Bsq_poly: Polynomial


def _validate_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"moment order m must be an integer >= 1, got {m!r}")


def _endpoint_slopes(m: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    # (P_m'(-1), P_{m+1}'(-1), P_m'(1), P_{m+1}'(1)) from the closed form
    # P_k'(1) = k(k+1)/2, P_k'(-1) = (-1)^(k-1) k(k+1)/2.
    dm = Fraction(m * (m + 1), 2)
    dm1 = Fraction((m + 1) * (m + 2), 2)
    return (-1) ** (m + 1) * dm, (-1) ** m * dm1, dm, dm1


def _solve_top_pair(m: int, rhs_minus, rhs_plus):
    # 2x2 system  alpha P_m'(+-1) + beta P_{m+1}'(+-1) = rhs(+-1), solved by
    # the explicit inverse; determinant is +-m(m+1)^2(m+2)/2, never zero.
    # Works for Fraction and Polynomial right-hand sides alike.
    sm, sm1, dm, dm1 = _endpoint_slopes(m)
    det = sm * dm1 - sm1 * dm
    alpha = (rhs_minus * dm1 - rhs_plus * sm1) * (Fraction(1) / det)
    beta = (rhs_plus * sm - rhs_minus * dm) * (Fraction(1) / det)
    return alpha, beta


def solve_interior(m: int, x, table: Optional[LegendreTable] = None) -> SharpSolution:
    """Exact sharp constant and extremal data at a rational x strictly inside (-1, 1).

    ``x`` may be an int, Fraction, or exact text ("1/2", "0.9"); floats are
    rejected to protect exactness. x = +-1 is out of domain here, use
    ``endpoint_constant`` / ``endpoint_extremal`` for the endpoint closed forms.
    """
    _validate_m(m)
    x = as_rational(x)
    if x == 1 or x == -1:
        raise ValueError(
            "x = +-1 is an endpoint: use endpoint_constant / endpoint_extremal"
        )
    if not -1 < x < 1:
        raise ValueError(f"x must lie in (-1, 1), got {x}")
    if table is None or table.max_degree < m + 1:
        table = shared_table(m + 1)

    gam = [table.gamma[k](x) for k in range(m)]  # gam[k] = gamma_k(x); gam[0] unused here
    fixed = sum((gam[k] * table.P[k] for k in range(1, m)), Polynomial())
    slope_fixed = fixed.derivative()
    alpha, beta = _solve_top_pair(
        m, -1 - slope_fixed(-1), 1 - slope_fixed(1)
    )
    a = -(fixed(x) + alpha * table.P[m](x) + beta * table.P[m + 1](x))
    denom = x * x + 1 - 2 * a
    c = Fraction(2) / denom
    bsq = denom / 4
    Q = a + fixed + alpha * table.P[m] + beta * table.P[m + 1]
    return SharpSolution(m=m, x=x, Q=Q, a=a, alpha=alpha, beta=beta, c=c, Bsq=bsq)


def solve_family(m: int, table: Optional[LegendreTable] = None) -> SharpFamily:
    """Run the construction with x symbolic: every output is a polynomial in x.

    The pipeline is identical to ``solve_interior``; the Legendre-basis
    coefficients gamma_k are already polynomials in x, and the 2x2 slope
    system has a constant coefficient matrix, so alpha, beta, a, and B^2 all
    stay polynomial. B^2 is even in x of degree 2m+2 (degree 2 for m = 1).
    """
    _validate_m(m)
    if table is None or table.max_degree < m + 1:
        table = shared_table(m + 1)

    # Slopes of the fixed Legendre block at the endpoints, as polynomials in x.
    slope_minus = Polynomial()
    slope_plus = Polynomial()
    for k in range(1, m):
        dk = Fraction(k * (k + 1), 2)
        slope_minus = slope_minus + table.gamma[k] * ((-1) ** (k + 1) * dk)
        slope_plus = slope_plus + table.gamma[k] * dk
    alpha_poly, beta_poly = _solve_top_pair(
        m, -1 - slope_minus, ONE - slope_plus
    )
    # Q(x) = 0 with every t-coefficient evaluated at t = x collapses each
    # product gamma_k(x) P_k(x) to an ordinary polynomial product in x.
    a_poly = Polynomial()
    for k in range(1, m):
        a_poly = a_poly + table.gamma[k] * table.P[k]
    a_poly = -(a_poly + alpha_poly * table.P[m] + beta_poly * table.P[m + 1])
    bsq_poly = (T * T + 1 - 2 * a_poly) * Fraction(1, 4)
    return SharpFamily(
        m=m,
        a_poly=a_poly,
        alpha_poly=alpha_poly,
        beta_poly=beta_poly,
        Bsq_poly=bsq_poly,
    )


def extremal(sol: SharpSolution) -> KinkFunction:
    """The extremal function y(t) = c (Q(t) - |t - x|) + 1, normalized so y(x) = 1.

    Stored as two expanded pieces: |t - x| is -(t - x) on [-1, x] and t - x
    on [x, 1]. The result has y'(-1) = y'(1) = 0 and all m moments zero.
    """
    ramp = T - sol.x
    left = (sol.Q + ramp) * sol.c + 1
    right = (sol.Q - ramp) * sol.c + 1
    return KinkFunction(kink=sol.x, left=left, right=right)


def energy_of_extremal(sol: SharpSolution) -> Fraction:
    """Exact energy of the unscaled kink part: integral of [(Q(t) - |t-x|)']^2.

    Equals 2/c identically; the verification suite asserts that. For the
    normalized extremal itself the derivative picks up the factor c, so its
    energy is c^2 * (2/c) = 2c = 1/Bsq.
    """
    slope = sol.Q.derivative()
    below = definite_integral((slope + 1) ** 2, -1, sol.x)
    above = definite_integral((slope - 1) ** 2, sol.x, 1)
    return below + above


def endpoint_constant(m: int) -> Fraction:
    """B_m(+-1)^2 = 2 / (m (m + 2)), the endpoint closed form."""
    _validate_m(m)
    return Fraction(2, m * (m + 2))


def endpoint_extremal(m: int, side: int = 1, table: Optional[LegendreTable] = None) -> Polynomial:
    """Extremal polynomial for the endpoint x = side (+1 or -1).

    At x = 1 the extremal is a multiple of (m+2) P_m + m P_{m+1}; it is
    normalized here to value 1 at the endpoint (dividing by 2m+2). Its
    derivative vanishes at the opposite endpoint and its first m moments
    are zero. The x = -1 case is the t -> -t reflection.
    """
    _validate_m(m)
    if side not in (1, -1):
        raise ValueError(f"side must be +1 or -1, got {side!r}")
    if table is None or table.max_degree < m + 1:
        table = shared_table(m + 1)
    base = (table.P[m] * (m + 2) + table.P[m + 1] * m) / (2 * m + 2)
    return base if side == 1 else base.reflected()


def bsq_zero_closed(n: int) -> Fraction:
    """B^2 at x = 0 for m = 2n+1 (equivalently m = 2n+2), n >= 2, in closed form.

    The two consecutive orders share one constant because every odd-degree
    contribution vanishes at the origin; what survives collapses into
    double-factorial sums.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(
            f"closed form is stated for n >= 2 (use solve_interior below that), got {n!r}"
        )
    total = Fraction(3, 32)
    for k in range(2, n + 1):
        total -= Fraction(
            (4 * k + 1) * double_factorial(2 * k - 3) * double_factorial(2 * k - 1),
            2 * double_factorial(2 * k + 2) * double_factorial(2 * k),
        )
    tail = Fraction(double_factorial(2 * n + 1), double_factorial(2 * n + 2))
    total += Fraction(7 * (-1) ** n, 16 * (n + 1) * (2 * n + 3)) * tail
    for k in range(2, n + 1):
        total -= (
            Fraction((-1) ** (n - k) * k * (2 * k + 1) * (4 * k + 1), 2 * (n + 1) * (2 * n + 3))
            * Fraction(double_factorial(2 * k - 3), double_factorial(2 * k + 2))
            * tail
        )
    return total
