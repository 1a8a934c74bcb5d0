"""Centrally symmetric convex polygons as generator lists.

A planar zonotope is determined by nonzero, pairwise non-colinear
generators e_1..e_m of strictly increasing argument in the upper
half-plane; its edges are the generators and their negatives.  Generators
supplied pointing into the lower half-plane are negated on construction,
the given order is then required to be by increasing argument.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SymmetryError, ZonotopeError
from .field import Field
from .lattice import PlaneVector

__all__ = ["Zonotope"]


def _normalize_upper(g: PlaneVector, idx: int) -> PlaneVector:
    sy = g.y.sign()
    if sy < 0 or (sy == 0 and g.x.sign() < 0):
        return -g
    if sy == 0 and g.x.sign() == 0:
        raise ZonotopeError(f"generator {idx} is zero")
    return g


def _argument_cmp(u: PlaneVector, v: PlaneVector) -> int:
    """Order upper-half-plane vectors by argument: negative when u comes first."""
    return -u.cross(v).sign()


class Zonotope:
    __slots__ = ("_generators",)

    def __init__(self, generators):
        gens = [_normalize_upper(g, i + 1) for i, g in enumerate(generators)]
        if len(gens) < 2:
            raise ZonotopeError("a zonotope needs at least 2 generators")
        rads = gens[0].field.radicands
        for g in gens:
            if g.field.radicands != rads:
                raise ZonotopeError("generators do not share a field")
        for i in range(len(gens) - 1):
            if gens[i].cross(gens[i + 1]).sign() <= 0:
                raise ZonotopeError(
                    f"generators {i + 1} and {i + 2} are not in strictly increasing argument order"
                )
        if gens[0].cross(gens[-1]).sign() <= 0:
            raise ZonotopeError("first and last generators violate the argument order")
        self._generators = tuple(gens)

    @property
    def generators(self) -> tuple[PlaneVector, ...]:
        return self._generators

    @property
    def m(self) -> int:
        return len(self._generators)

    @property
    def field(self) -> Field:
        return self._generators[0].field

    def is_parallelogram(self) -> bool:
        return self.m == 2

    def signed_edges(self) -> list[PlaneVector]:
        """The 2m edge vectors in counterclockwise order: e_1..e_m, -e_1..-e_m."""
        return list(self._generators) + [-g for g in self._generators]

    def pair_translations(self) -> list[PlaneVector]:
        """For each edge e_j, the translation carrying it onto its parallel edge.

        With the sign convention e_{j+m} = -e_j, the j-th translation is
        the sum of the m-1 edges following e_j around the boundary.
        """
        edges = self.signed_edges()
        m = self.m
        out = []
        for j in range(m):
            t = edges[(j + 1) % (2 * m)]
            for i in range(j + 2, j + m):
                t = t + edges[i % (2 * m)]
            out.append(t)
        return out

    def vertices(self) -> list[PlaneVector]:
        """The 2m vertices, counterclockwise, centered at the origin."""
        half = Fraction(1, 2)
        total = self._generators[0]
        for g in self._generators[1:]:
            total = total + g
        v = total.scale(-half)
        out = [v]
        for e in self.signed_edges()[:-1]:
            v = v + e
            out.append(v)
        return out

    def area(self):
        """Sum of |det(e_i, e_j)| over generator pairs (equals the shoelace area)."""
        gens = self._generators
        total = self.field.zero()
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                total = total + gens[i].cross(gens[j])
        return total

    @classmethod
    def from_vertices(cls, vertices) -> "Zonotope":
        """Build from a cyclically ordered vertex list of a symmetric convex polygon."""
        vs = list(vertices)
        n = len(vs)
        if n < 4 or n % 2 != 0:
            raise SymmetryError(f"need an even number >= 4 of vertices, got {n}")
        field = vs[0].field
        zero = field.zero()
        doubled_area = zero
        for i in range(n):
            doubled_area = doubled_area + vs[i].cross(vs[(i + 1) % n])
        s = doubled_area.sign()
        if s == 0:
            raise SymmetryError("degenerate vertex list")
        if s < 0:
            vs.reverse()
        m = n // 2
        center2 = vs[0] + vs[m]
        for i in range(1, m):
            if not (vs[i] + vs[i + m] - center2).is_zero():
                raise SymmetryError("vertex list is not centrally symmetric")
        edges = [vs[(i + 1) % n] - vs[i] for i in range(n)]
        for i in range(n):
            if edges[i].is_zero():
                raise SymmetryError(f"repeated vertex at position {i}")
            if edges[i].cross(edges[(i + 1) % n]).sign() <= 0:
                raise SymmetryError("vertex list is not strictly convex")
        gens = [_normalize_upper(edges[i], i + 1) for i in range(m)]
        gens.sort(key=_ArgKey)
        return cls(gens)


class _ArgKey:
    __slots__ = ("v",)

    def __init__(self, v: PlaneVector):
        self.v = v

    def __lt__(self, other: "_ArgKey") -> bool:
        return _argument_cmp(self.v, other.v) < 0
