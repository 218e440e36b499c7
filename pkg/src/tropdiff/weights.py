"""Boolean weights: subsets of N^m that are finite or cofinite.

A weight stands for the power series whose coefficient at t^I is 1 when I is
in the set and 0 otherwise.  Shifting by a multi-index J models applying the
derivative d^J at the level of supports: the shifted set keeps those I with
I + J in the original set.  Cofinite weights stay cofinite (possibly becoming
all of N^m); finite weights stay finite (possibly empty).

vertices() returns the tropical value of the series: the vertex set of the
support.  For a cofinite set the support is infinite, but every point with a
coordinate beyond the excluded region is dominated by one inside a bounding
box, so enumerating the box suffices.

substitution_poly is the polynomial that the translation machinery plugs in
for a single derivative x_{i,J}.  The indicator kernel puts coefficient 1 on
each vertex; the factorial kernel weights a vertex I by prod_k (I_k+J_k)!/I_k!
as differentiation of the honest series would.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, TropdiffError
from .series import QPoly
from .vertexpoly import VertexPoly

Point = tuple[int, ...]


def _clean_points(m: int, points: Iterable[Sequence[int]]) -> frozenset[Point]:
    out = set()
    for p in points:
        q = tuple(int(v) for v in p)
        if len(q) != m:
            raise DimensionMismatch(f"point {q} does not have {m} coordinates")
        if any(v < 0 for v in q):
            raise ValueError(f"weight points must be nonnegative, got {q}")
        out.add(q)
    return frozenset(out)


class BooleanWeight:
    """Finite or cofinite subset of N^m."""

    __slots__ = ("m", "kind", "data")

    def __init__(self, m: int, kind: str, data: frozenset[Point]):
        if m < 1:
            raise ValueError("need at least one coordinate")
        if kind == "cofinite" and not data:
            kind = "full"
        if kind == "full":
            data = frozenset()
        elif kind not in ("finite", "cofinite"):
            raise ValueError(f"unknown weight kind {kind!r}")
        self.m = m
        self.kind = kind
        self.data = data

    @classmethod
    def full(cls, m: int) -> "BooleanWeight":
        return cls(m, "full", frozenset())

    @classmethod
    def finite(cls, m: int, points: Iterable[Sequence[int]]) -> "BooleanWeight":
        return cls(m, "finite", _clean_points(m, points))

    @classmethod
    def cofinite(cls, m: int, excluded: Iterable[Sequence[int]]) -> "BooleanWeight":
        return cls(m, "cofinite", _clean_points(m, excluded))

    def __contains__(self, point: Sequence[int]) -> bool:
        p = tuple(int(v) for v in point)
        if self.kind == "full":
            return True
        if self.kind == "finite":
            return p in self.data
        return p not in self.data

    @property
    def is_empty(self) -> bool:
        return self.kind == "finite" and not self.data

    def shift(self, J: Sequence[int]) -> "BooleanWeight":
        """The set {I >= 0 : I + J in self}."""
        J = tuple(int(v) for v in J)
        if len(J) != self.m:
            raise DimensionMismatch(f"multi-index {J} does not have {self.m} coordinates")
        if self.kind == "full":
            return self
        moved = frozenset(
            tuple(i - j for i, j in zip(p, J))
            for p in self.data
            if all(i >= j for i, j in zip(p, J))
        )
        return BooleanWeight(self.m, self.kind, moved)

    def vertices(self) -> VertexPoly:
        """Tropical value of the series with this support."""
        if self.kind == "full":
            return VertexPoly.one(self.m)
        if self.kind == "finite":
            return VertexPoly(self.m, self.data)
        # Any point beyond the box is dominated by the box point below it,
        # which cannot be excluded, so the box carries every vertex.
        bounds = [1 + max(p[k] for p in self.data) for k in range(self.m)]
        support = [
            p
            for p in itertools.product(*(range(b + 1) for b in bounds))
            if p not in self.data
        ]
        return VertexPoly(self.m, support)

    def series(self) -> QPoly:
        """The honest polynomial, available for finite supports only."""
        if self.kind != "finite":
            raise TropdiffError("only a finite weight is a polynomial")
        return QPoly(self.m, {p: Fraction(1) for p in self.data})

    def __eq__(self, other):
        if not isinstance(other, BooleanWeight):
            return NotImplemented
        return (self.m, self.kind, self.data) == (other.m, other.kind, other.data)

    def __hash__(self):
        return hash((self.m, self.kind, self.data))

    def __str__(self):
        if self.kind == "full":
            return "N^%d" % self.m
        pts = ", ".join("(" + ",".join(map(str, p)) + ")" for p in sorted(self.data))
        if self.kind == "finite":
            return "{%s}" % pts
        return "N^%d minus {%s}" % (self.m, pts)

    __repr__ = __str__


class SubstitutionKernel(enum.Enum):
    INDICATOR = "indicator"
    FACTORIAL = "factorial"

    @classmethod
    def from_string(cls, name: str) -> "SubstitutionKernel":
        try:
            return cls(name.lower())
        except ValueError:
            raise TropdiffError(f"unknown kernel {name!r}") from None


def substitution_poly(
    weight: BooleanWeight, J: Sequence[int], kernel: SubstitutionKernel = SubstitutionKernel.INDICATOR
) -> QPoly:
    """Polynomial substituted for one derivative of a weight.

    Supported on the vertices of the shifted weight; zero when the shift
    empties the support.
    """
    J = tuple(int(v) for v in J)
    vertices = weight.shift(J).vertices()
    terms: dict[Point, Fraction] = {}
    for p in vertices:
        if kernel is SubstitutionKernel.INDICATOR:
            c = 1
        else:
            c = 1
            for i, j in zip(p, J):
                for r in range(1, j + 1):
                    c *= i + r
        terms[p] = Fraction(c)
    return QPoly(weight.m, terms)
