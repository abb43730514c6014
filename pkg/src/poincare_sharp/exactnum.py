"""Exact rational scalars.

The whole exact computation path works over arbitrary-precision rationals.
``fractions.Fraction`` already provides exactly the semantics required
(always stored reduced, positive denominator, canonical zero 0/1, exact
field arithmetic at any magnitude), so ``Rational`` is an alias for it and
this module only adds the constructors and text forms the rest of the
package relies on.

Two textual forms are accepted everywhere a rational is read:

* ``"p/q"`` with integer p, q
* a decimal string such as ``"0.9"``, parsed as the exact decimal fraction
  9/10 and never as a binary float
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(numerator: int, denominator: int = 1) -> Rational:
    """Build the reduced fraction numerator/denominator.

    Raises ZeroDivisionError for a zero denominator.
    """
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or an exact decimal string like ``"0.125"``.

    Raises ValueError for malformed input or a zero denominator.
    """
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational {text!r}") from None
    except (ValueError, TypeError, AttributeError):
        raise ValueError(f"not a rational: {text!r}") from None


def format_rational(value: Rational) -> str:
    """Format as ``"p/q"`` (reduced, q > 0), e.g. 1/8 -> ``"1/8"``, 0 -> ``"0/1"``."""
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Rational:
    """Coerce int, Fraction, or accepted text to Rational.

    Floats are rejected: a binary float would silently poison the exact
    path (0.9 is not 9/10). Callers holding a float belong on the oracle
    side or must pass a decimal string instead.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"exact path takes int, Fraction, or text, not {type(value).__name__}"
    )
