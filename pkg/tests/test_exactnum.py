"""Exact rational scalar layer: construction, parsing, formatting, field laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare_sharp.exactnum import as_rational, format_rational, parse_rational, rat

nonzero_rationals = st.fractions().filter(lambda q: q != 0)


class TestRat:
    def test_reduces(self):
        assert rat(2, 4) == Fraction(1, 2)

    def test_sign_normalization(self):
        v = rat(3, -6)
        assert v == Fraction(-1, 2)
        assert v.denominator == 2
        assert v.numerator == -1

    def test_canonical_zero(self):
        v = rat(0, 7)
        assert v.numerator == 0
        assert v.denominator == 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            rat(1, 0)

    def test_default_denominator(self):
        assert rat(5) == Fraction(5)

    @given(st.integers(), st.integers().filter(lambda d: d != 0))
    def test_always_reduced_with_positive_denominator(self, n, d):
        v = rat(n, d)
        assert v.denominator > 0
        from math import gcd

        assert gcd(abs(v.numerator), v.denominator) == 1


class TestParse:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-3/4", Fraction(-3, 4)),
            ("2/4", Fraction(1, 2)),
            ("7", Fraction(7)),
            ("-7", Fraction(-7)),
            ("0", Fraction(0)),
            ("0.125", Fraction(1, 8)),
            ("0.9", Fraction(9, 10)),
            ("-0.5", Fraction(-1, 2)),
        ],
    )
    def test_accepted_forms(self, text, expected):
        assert parse_rational(text) == expected

    def test_decimal_is_exact_not_binary(self):
        # 0.9 has no finite binary expansion; the parse must be the decimal 9/10
        assert parse_rational("0.9") == Fraction(9, 10)
        assert parse_rational("0.9") != Fraction(0.9)

    @pytest.mark.parametrize("text", ["", "abc", "1/2/3", "1/0", "1.2.3", "/3", "--1", "nan", "inf"])
    def test_malformed_rejected(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)


class TestFormat:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (Fraction(1, 6), "1/6"),
            (Fraction(0), "0/1"),
            (Fraction(-1, 2), "-1/2"),
            (Fraction(7), "7/1"),
        ],
    )
    def test_examples(self, value, expected):
        assert format_rational(value) == expected

    @given(st.fractions())
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    def test_decimal_round_trip(self):
        assert format_rational(parse_rational("0.125")) == "1/8"


class TestFieldAxioms:
    @given(st.fractions(), st.fractions(), st.fractions())
    def test_additive_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(st.fractions(), st.fractions(), st.fractions())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(nonzero_rationals)
    def test_multiplicative_inverse(self, a):
        assert a * (1 / a) == 1

    @given(st.fractions(), st.fractions())
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a


class TestAsRational:
    def test_coercions(self):
        assert as_rational(3) == Fraction(3)
        assert as_rational(Fraction(2, 5)) == Fraction(2, 5)
        assert as_rational("2/5") == Fraction(2, 5)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)


class TestBigMagnitudes:
    def test_no_overflow_at_huge_sizes(self):
        big = rat(10**300 + 1, 10**150)
        prod = big * big
        assert prod.numerator == (10**300 + 1) ** 2
        assert prod.denominator == 10**300
        assert (big - big) == 0
