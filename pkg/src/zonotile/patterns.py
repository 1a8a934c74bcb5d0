"""Built-in polygons and translate sets used by the CLI examples command.

``tetromino-L1`` and ``tetromino-L2`` are two tilings of the skew
tetromino (a non-convex union of four unit squares, whose edges still
pair up); ``tetromino-union`` is their multiset union, a 2-fold covering.
L2 has no translational period, which is why these only admit
window-relative verification.  ``octagon-family`` is a symmetric octagon
with lattice vertices together with two translated copies of Z x 2Z, one
shifted by (beta, 1); it covers the plane exactly 7 times for every beta,
rational or not.
"""

from __future__ import annotations

from fractions import Fraction

from .covering import Polygon, TranslateSet, WindowPattern
from .errors import GeometryError
from .field import Field, FieldElement, RATIONALS
from .lattice import PlaneLattice, PlaneVector, vector

__all__ = ["BUILTIN_NAMES", "builtin_scene"]

DEFAULT_WINDOW = (Fraction(-6), Fraction(-6), Fraction(6), Fraction(6))

TETROMINO_VERTICES = [(-1, -1), (0, -1), (0, 0), (1, 0), (1, 2), (0, 2), (0, 1), (-1, 1)]

OCTAGON_VERTICES = [(1, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2), (0, 1)]


def skew_tetromino(field: Field = RATIONALS) -> Polygon:
    return Polygon([vector(field, x, y) for x, y in TETROMINO_VERTICES])


def lattice_octagon(field: Field = RATIONALS) -> Polygon:
    return Polygon([vector(field, x, y) for x, y in OCTAGON_VERTICES])


def tetromino_l1_multiplicity(m: int, n: int) -> int:
    return 1 if (m % 2 == 0 and n % 2 == 0 and m != 0) or (m == 0 and n % 2 == 1) else 0


def tetromino_l2_multiplicity(m: int, n: int) -> int:
    if m % 2 == 0 and n % 2 == 0:
        return 1 if m >= n else 0
    if m % 2 == 1 and n % 2 == 1:
        return 1 if m < n else 0
    return 0


def tetromino_union_multiplicity(m: int, n: int) -> int:
    return tetromino_l1_multiplicity(m, n) + tetromino_l2_multiplicity(m, n)


_TETROMINO_RULES = {
    "tetromino-L1": tetromino_l1_multiplicity,
    "tetromino-L2": tetromino_l2_multiplicity,
    "tetromino-union": tetromino_union_multiplicity,
}

BUILTIN_NAMES = tuple(_TETROMINO_RULES) + ("octagon-family",)


def octagon_strip_lattice(field: Field = RATIONALS) -> PlaneLattice:
    return PlaneLattice(vector(field, 1, 0), vector(field, 0, 2))


def builtin_scene(name: str, window=None, beta=None) -> tuple[Polygon, TranslateSet]:
    """The named builtin polygon and translate set.

    ``window`` (rational 4-tuple) applies to the tetromino patterns and
    defaults to [-6, 6]^2.  ``beta`` (Fraction or FieldElement) is the
    horizontal offset of the shifted lattice copy in the octagon family
    and defaults to 1/3.
    """
    if name in _TETROMINO_RULES:
        win = tuple(Fraction(w) for w in (window if window is not None else DEFAULT_WINDOW))
        if win[0] >= win[2] or win[1] >= win[3]:
            raise GeometryError("window is empty")
        pattern = WindowPattern(name, win, _TETROMINO_RULES[name])
        return skew_tetromino(), TranslateSet.windowed(pattern)
    if name == "octagon-family":
        if beta is None:
            beta = Fraction(1, 3)
        field = beta.field if isinstance(beta, FieldElement) else RATIONALS
        poly = lattice_octagon(field)
        lat = octagon_strip_lattice(field)
        zero = PlaneVector(field.zero(), field.zero())
        shift = vector(field, beta, 1)
        return poly, TranslateSet.periodic([(lat, zero), (lat, shift)])
    raise GeometryError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")
