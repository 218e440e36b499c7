#!/usr/bin/env python3
"""From rational functions to vertex sets.

trop sends a fraction of polynomials to the fraction of the corner sets of
their supports.  It is multiplicative, and the preimage of "at most 1" is a
ring: the unit ball.  Inside the ball, divisibility questions reduce to
comparisons of vertex sets.
"""

from tropdiff import (
    bezout_witness,
    divides_in_unit_ball,
    in_unit_ball,
    is_unit,
    parse_poly,
    parse_rational,
    separating_constants,
    trop_frac,
    trop_poly,
)

f = parse_poly("t^2 + t*u + u^3")
print("f =", f)
print("trop f =", trop_poly(f))

q = parse_rational("t/(t+u)")
print("\nq =", q, " trop q =", trop_frac(q))
print("q in unit ball:", in_unit_ball(q))
print("1/t in unit ball:", in_unit_ball(parse_rational("1/t")))

# Units are the elements whose value is exactly 1.
for text in ("(t+u)/(2*t+3*u)", "t/(t+u)", "1/2"):
    print(f"is_unit({text}) = {is_unit(parse_rational(text))}")

# Divisibility in the ball only looks at tropical values.
a, b = parse_poly("t^2+u^2"), parse_poly("t*u")
print("\nt^2+u^2 divides t*u in the ball:", divides_in_unit_ball(a, b))
print("t divides 1 in the ball:", divides_in_unit_ball(parse_poly("t", 2), parse_poly("1", 2)))

# The ball is Bezout: the value of an ideal (phi, psi) is attained by a
# combination phi + M*psi for a small integer M.  M = 1 fails here because
# the leading terms cancel, M = 2 works.
phi, psi = parse_rational("t"), parse_rational("-t+u")
M = bezout_witness(phi, psi)
print(f"\nbezout witness for ({phi}, {psi}): M = {M}")
print("value attained:", trop_frac(phi + M * psi) == trop_frac(phi) + trop_frac(psi))

# Constants that separate a unit-ball element from all its residues: the
# product of the differences drops strictly below every unit.
q = parse_rational("(t+2*u)/(t+u)")
alphas = separating_constants(q)
print(f"\nseparating constants of {q}: {alphas}")
product = (q - alphas[0]) * (q - alphas[1])
print("product of differences:", product, " trop:", trop_frac(product))
