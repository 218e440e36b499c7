"""Shared random generators and brute-force oracles for the test suite.

Everything takes an explicit random.Random so failures reproduce; the
acceptance suite fixes its own seeds.
"""

from fractions import Fraction

from tropdiff import (
    BooleanWeight,
    DiffMonomial,
    DiffPoly,
    NotAMonomialOrder,
    QPoly,
    RationalFunction,
    order_validate,
    trop_poly,
)

NONZERO = (-3, -2, -1, 1, 2, 3)


def exponent(rng, m, hi=6):
    return tuple(rng.randrange(hi + 1) for _ in range(m))


def qpoly(rng, m, max_terms=4, hi=6):
    """Random nonzero polynomial with small integer coefficients."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = exponent(rng, m, hi)
            terms[e] = terms.get(e, Fraction(0)) + rng.choice(NONZERO)
        f = QPoly(m, terms)
        if not f.is_zero:
            return f


def rational(rng, m, max_terms=3, hi=4):
    return RationalFunction(qpoly(rng, m, max_terms, hi), qpoly(rng, m, max_terms, hi))


def unit_ball_fraction(rng, m, max_terms=4, hi=4, nonzero=False):
    """Random f/g with trop(f) <= trop(g).

    Every numerator exponent sits above some denominator vertex, which pins
    the numerator's polyhedron inside the denominator's.
    """
    g = qpoly(rng, m, max_terms, hi)
    vertices = trop_poly(g).points
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            base = rng.choice(vertices)
            e = tuple(b + rng.randrange(3) for b in base)
            terms[e] = terms.get(e, Fraction(0)) + rng.choice(NONZERO)
        f = QPoly(m, terms)
        if not (nonzero and f.is_zero):
            return RationalFunction(f, g)


def matrix_order(rng, m):
    """Random validated full-rank matrix order (first row positive)."""
    while True:
        rows = [[rng.randint(1, 3) for _ in range(m)]]
        for _ in range(m - 1):
            rows.append([rng.randint(-3, 3) for _ in range(m)])
        try:
            order = order_validate(rows)
        except NotAMonomialOrder:
            continue
        if not order.rank_deficient:
            return order


def weight(rng, m, hi=3):
    kind = rng.randrange(3)
    if kind == 0:
        return BooleanWeight.full(m)
    points = [exponent(rng, m, hi) for _ in range(rng.randint(1, 4))]
    if kind == 1:
        return BooleanWeight.finite(m, points)
    return BooleanWeight.cofinite(m, points)


def finite_weight(rng, m, hi=3):
    points = [exponent(rng, m, hi) for _ in range(rng.randint(1, 4))]
    return BooleanWeight.finite(m, points)


def diff_monomial(rng, m, n, hi=2):
    mono = DiffMonomial.var(rng.randint(1, n), exponent(rng, m, hi), rng.randint(1, 2))
    if rng.random() < 0.5:
        mono = mono * DiffMonomial.var(rng.randint(1, n), exponent(rng, m, hi))
    return mono


def diffpoly(rng, m, n, max_terms=2, coeff_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        coeff = RationalFunction(
            qpoly(rng, m, coeff_terms, 3), qpoly(rng, m, coeff_terms, 3)
        )
        terms[diff_monomial(rng, m, n)] = coeff
    return DiffPoly(m, n, terms)


# -- brute-force order comparators, written straight from the definitions ----


def lex_expected(a, b):
    """t1 smallest: the highest-numbered variable decides first."""
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def grlex_expected(a, b):
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    return lex_expected(a, b)


def grevlex_expected(a, b):
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    for x, y in zip(a, b):
        if x != y:
            return -1 if x > y else 1
    return 0
