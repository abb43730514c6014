"""Dense univariate polynomials over exact rationals, plus two-piece kink functions.

A polynomial is a tuple of Rational coefficients in ascending degree order,
kept canonical: the highest-degree coefficient is nonzero, and the zero
polynomial is the empty tuple (its degree is -1 for bookkeeping). Canonical
form makes equality structural, which the exact invariant checks depend on.

A KinkFunction is a continuous function on [-1, 1] that is polynomial on
each side of a single interior kink. Functions of the form
poly(t) + s*|t - kink| are stored with the absolute value absorbed into the
two pieces, so every integral against a kink function reduces to plain
polynomial integration on [-1, kink] and [kink, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exactnum import Rational, format_rational, parse_rational

Scalar = Union[int, Fraction]


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"polynomial coefficients must be exact, not {type(value).__name__}")


@dataclass(frozen=True)
class Polynomial:
    """Immutable dense polynomial; ``coeffs[k]`` multiplies t**k."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = tuple(_coerce(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = _coerce(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial((_coerce(other),))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-other if isinstance(other, Polynomial) else -_coerce(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + _coerce(other)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            s = _coerce(other)
            return Polynomial(tuple(c * s for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> Polynomial:
        return self * (Fraction(1) / _coerce(scalar))

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def antiderivative(self) -> Polynomial:
        """Antiderivative with zero constant term."""
        return Polynomial(
            (Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs))
        )

    def reflected(self) -> Polynomial:
        """The polynomial t -> p(-t)."""
        return Polynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))


ZERO = Polynomial()
ONE = Polynomial((Fraction(1),))
T = Polynomial((Fraction(0), Fraction(1)))


def poly(coeffs: Iterable[Scalar]) -> Polynomial:
    """Polynomial from ascending coefficients (ints allowed)."""
    return Polynomial(tuple(coeffs))


def monomial(degree: int, coeff: Scalar = 1) -> Polynomial:
    return Polynomial((Fraction(0),) * degree + (_coerce(coeff),))


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    return p(x)


def definite_integral(p: Polynomial, a: Scalar, b: Scalar) -> Fraction:
    """Exact integral of p over [a, b]."""
    anti = p.antiderivative()
    return anti(b) - anti(a)


def abs_kernel_integral(p: Polynomial, x: Scalar) -> Fraction:
    """Exact integral of p(t)*|t - x| over [-1, 1] for -1 <= x <= 1.

    Split at x: the integrand is p(t)*(x - t) below and p(t)*(t - x) above.
    """
    x = _coerce(x)
    if not -1 <= x <= 1:
        raise ValueError(f"kernel point {x} outside [-1, 1]")
    shifted = p * (T - x)
    return definite_integral(shifted, x, 1) - definite_integral(shifted, -1, x)


def coeff_strings(p: Polynomial) -> list[str]:
    """Ascending-degree ``"p/q"`` strings, the JSON wire form."""
    return [format_rational(c) for c in p.coeffs]


def poly_from_strings(items: Iterable[str]) -> Polynomial:
    return Polynomial(tuple(parse_rational(s) for s in items))


@dataclass(frozen=True)
class KinkFunction:
    """Continuous two-piece polynomial with one derivative kink inside (-1, 1)."""

    kink: Fraction
    left: Polynomial
    right: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "kink", _coerce(self.kink))
        if not -1 < self.kink < 1:
            raise ValueError(f"kink {self.kink} not strictly inside (-1, 1)")
        if self.left(self.kink) != self.right(self.kink):
            raise ValueError("discontinuous at the kink")

    def __call__(self, t: Scalar) -> Fraction:
        t = _coerce(t)
        return self.left(t) if t <= self.kink else self.right(t)

    def weighted_integral(self, weight: Polynomial) -> Fraction:
        """Exact integral of weight(t) * self(t) over [-1, 1]."""
        below = definite_integral(weight * self.left, -1, self.kink)
        above = definite_integral(weight * self.right, self.kink, 1)
        return below + above

    def moment(self, k: int) -> Fraction:
        """Exact integral of t**k * self(t) over [-1, 1]."""
        return self.weighted_integral(monomial(k))
