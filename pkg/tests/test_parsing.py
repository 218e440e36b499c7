import random
from fractions import Fraction

import pytest

from helpers import qpoly, rational
from tropdiff import (
    NegativeExponent,
    PolyParseError,
    QPoly,
    UnknownVariable,
    ZeroDenominator,
    parse_poly,
    parse_rational,
)


class TestGrammar:
    def test_precedence(self):
        assert parse_poly("t + u*t^2") == QPoly(2, {(1, 0): 1, (2, 1): 1})
        assert parse_poly("-t^2") == QPoly(2, {(2, 0): -1})
        assert parse_poly("2*t + 3") == QPoly(2, {(1, 0): 2, (0, 0): 3})

    def test_unary_chains(self):
        assert parse_poly("--t") == parse_poly("t")
        assert parse_poly("+-+t") == parse_poly("-t")

    def test_parentheses(self):
        assert parse_poly("(t+u)^2") == QPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert parse_poly("t*(u+1)") == QPoly(2, {(1, 1): 1, (1, 0): 1})

    def test_omega_denominator(self):
        f = parse_poly("t1^3 + t1*t2 + t2^3")
        assert f.terms == {
            (3, 0): Fraction(1),
            (1, 1): Fraction(1),
            (0, 3): Fraction(1),
        }

    def test_rational_literals_in_poly(self):
        assert parse_poly("3/4*t") == QPoly(2, {(1, 0): Fraction(3, 4)})
        assert parse_poly("t/2") == QPoly(2, {(1, 0): Fraction(1, 2)})


class TestVariables:
    def test_aliases(self):
        assert parse_poly("t") == parse_poly("t1")
        assert parse_poly("u") == parse_poly("t2")

    def test_higher_indices(self):
        f = parse_poly("t3", 3)
        assert f.m == 3
        assert f.terms == {(0, 0, 1): Fraction(1)}

    def test_inferred_m_floor(self):
        assert parse_poly("t").m == 2
        assert parse_poly("5").m == 2
        assert parse_poly("t3 + t1").m == 3

    def test_out_of_range_with_explicit_m(self):
        with pytest.raises(UnknownVariable) as info:
            parse_poly("t + t3", 2)
        assert info.value.position == 4

    def test_unknown_name(self):
        with pytest.raises(UnknownVariable):
            parse_poly("x + 1")
        with pytest.raises(UnknownVariable):
            parse_poly("t0")


class TestErrors:
    def test_negative_exponent(self):
        with pytest.raises(NegativeExponent) as info:
            parse_poly("t^-1")
        assert info.value.position == 2

    def test_non_integer_exponent(self):
        with pytest.raises(PolyParseError):
            parse_poly("t^u")

    def test_poly_mode_division(self):
        with pytest.raises(PolyParseError):
            parse_poly("t/u")
        with pytest.raises(PolyParseError):
            parse_poly("1/(t+u)")
        # same text is fine as a rational function
        parse_rational("t/u")

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            parse_rational("t/0")
        with pytest.raises(ZeroDenominator):
            parse_poly("1/0")
        with pytest.raises(ZeroDenominator):
            parse_rational("t/(u-u)")

    def test_empty_input(self):
        with pytest.raises(PolyParseError):
            parse_poly("")
        with pytest.raises(PolyParseError):
            parse_rational("   ")

    def test_trailing_input(self):
        with pytest.raises(PolyParseError):
            parse_poly("t )")
        with pytest.raises(PolyParseError):
            parse_poly("t t")

    def test_unexpected_character(self):
        with pytest.raises(PolyParseError) as info:
            parse_poly("t$u")
        assert info.value.position == 1

    def test_unclosed_parenthesis(self):
        with pytest.raises(PolyParseError):
            parse_poly("(t+u")


class TestRoundTrip:
    def test_poly_str_reparses(self):
        rng = random.Random(81)
        for _ in range(200):
            f = qpoly(rng, rng.choice((1, 2, 3)))
            assert parse_poly(str(f), f.m) == f

    def test_rational_str_reparses(self):
        rng = random.Random(82)
        for _ in range(200):
            q = rational(rng, rng.choice((1, 2, 3)))
            assert parse_rational(str(q), q.m) == q
