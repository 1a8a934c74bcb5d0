"""Brute-force covering verification: does a translate set cover the plane
a constant number of times?

The covering function x -> #{translates whose interior contains x} is
piecewise constant on the faces of the arrangement of all translate
edges.  For a periodic translate set it suffices to certify constancy on
one fundamental cell of the common period lattice; a windowed (explicit)
set only ever gets a window-relative verdict.

Faces are visited by an exact vertical decomposition: collect every edge
endpoint and edge crossing abscissa inside the cell, and between two
consecutive events sample the midpoint of every gap in the ladder of
edges crossing the slab.  Every positive-area face of the arrangement
restricted to the cell receives at least one strictly interior sample, and
no sample ever lands on an edge, so boundary handling never needs a
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from random import Random

from .errors import BoundaryError, GeometryError, WindowError
from .field import Field, FieldElement
from .lattice import PlaneLattice, PlaneVector, intersect, vector

__all__ = [
    "Polygon",
    "Box",
    "TranslateSet",
    "WindowPattern",
    "VerifyReport",
    "lattice_points_in_box",
    "covering_at",
    "verify_covering",
    "strip_profile",
]

_SAMPLED_SEED = 987654321


@dataclass(frozen=True)
class Box:
    """A closed axis-aligned box with exact field-element corners."""

    x0: FieldElement
    y0: FieldElement
    x1: FieldElement
    y1: FieldElement

    def corners(self) -> list[PlaneVector]:
        return [
            PlaneVector(self.x0, self.y0),
            PlaneVector(self.x1, self.y0),
            PlaneVector(self.x1, self.y1),
            PlaneVector(self.x0, self.y1),
        ]

    def shift(self, v: PlaneVector) -> "Box":
        return Box(self.x0 + v.x, self.y0 + v.y, self.x1 + v.x, self.y1 + v.y)

    def is_empty(self) -> bool:
        return (self.x1 - self.x0).sign() < 0 or (self.y1 - self.y0).sign() < 0


class Polygon:
    """A simple polygon with exact vertices, oriented counterclockwise."""

    __slots__ = ("vertices", "bbox")

    def __init__(self, vertices):
        vs = list(vertices)
        if len(vs) < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        doubled = vs[0].field.zero()
        for i in range(len(vs)):
            doubled = doubled + vs[i].cross(vs[(i + 1) % len(vs)])
        s = doubled.sign()
        if s == 0:
            raise GeometryError("degenerate polygon")
        if s < 0:
            vs.reverse()
        self.vertices = tuple(vs)
        xs = [v.x for v in vs]
        ys = [v.y for v in vs]
        self.bbox = Box(min(xs), min(ys), max(xs), max(ys))

    @classmethod
    def from_zonotope(cls, z) -> "Polygon":
        return cls(z.vertices())

    @property
    def field(self) -> Field:
        return self.vertices[0].field

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def locate(self, p: PlaneVector) -> int:
        """+1 strictly inside, 0 on the boundary, -1 strictly outside."""
        bb = self.bbox
        if (
            (p.x - bb.x0).sign() < 0
            or (bb.x1 - p.x).sign() < 0
            or (p.y - bb.y0).sign() < 0
            or (bb.y1 - p.y).sign() < 0
        ):
            return -1
        parity = 0
        for a, b in self.edges():
            ab = b - a
            ap = p - a
            if ab.cross(ap).is_zero():
                t = ap.dot(ab)
                if t.sign() >= 0 and (ab.dot(ab) - t).sign() >= 0:
                    return 0
                continue
            dy = ab.y
            sdy = dy.sign()
            if sdy == 0:
                continue
            # half-open in y so that a ray through a vertex counts once
            if sdy > 0:
                if (p.y - a.y).sign() < 0 or (b.y - p.y).sign() <= 0:
                    continue
            else:
                if (p.y - b.y).sign() < 0 or (a.y - p.y).sign() <= 0:
                    continue
            val = (a.x - p.x) * dy + (p.y - a.y) * ab.x
            if val.sign() * sdy > 0:
                parity ^= 1
        return 1 if parity else -1

    def area(self) -> FieldElement:
        doubled = self.field.zero()
        vs = self.vertices
        for i in range(len(vs)):
            doubled = doubled + vs[i].cross(vs[(i + 1) % len(vs)])
        return doubled / 2


class WindowPattern:
    """An explicit point multiset, defined by a membership rule on Z^2,
    truncated to a rational window."""

    __slots__ = ("name", "window", "_multiplicity")

    def __init__(self, name: str, window: tuple[Fraction, Fraction, Fraction, Fraction], multiplicity):
        self.name = name
        self.window = tuple(Fraction(w) for w in window)
        self._multiplicity = multiplicity

    def multiplicity(self, m: int, n: int) -> int:
        return self._multiplicity(m, n)

    def points_in(self, box: Box) -> list[tuple[PlaneVector, int]]:
        field = box.x0.field
        wx0, wy0, wx1, wy1 = self.window
        mlo = max(box.x0.ceil(), -(-wx0.numerator // wx0.denominator))
        mhi = min(box.x1.floor(), wx1.numerator // wx1.denominator)
        nlo = max(box.y0.ceil(), -(-wy0.numerator // wy0.denominator))
        nhi = min(box.y1.floor(), wy1.numerator // wy1.denominator)
        out = []
        for m in range(mlo, mhi + 1):
            for n in range(nlo, nhi + 1):
                k = self._multiplicity(m, n)
                if k:
                    out.append((vector(field, m, n), k))
        return out


class TranslateSet:
    """A discrete multiset: a union of translated lattices, or a windowed
    explicit pattern."""

    __slots__ = ("parts", "pattern")

    def __init__(self, parts=None, pattern=None):
        if (parts is None) == (pattern is None):
            raise GeometryError("translate set needs lattice parts or a pattern")
        if parts is not None and not parts:
            raise GeometryError("periodic translate set needs at least one part")
        self.parts = tuple(parts) if parts is not None else None
        self.pattern = pattern

    @classmethod
    def periodic(cls, parts) -> "TranslateSet":
        return cls(parts=list(parts))

    @classmethod
    def windowed(cls, pattern: WindowPattern) -> "TranslateSet":
        return cls(pattern=pattern)

    @property
    def is_periodic(self) -> bool:
        return self.parts is not None

    def shifted(self, v: PlaneVector) -> "TranslateSet":
        if not self.is_periodic:
            raise GeometryError("cannot shift a windowed pattern")
        return TranslateSet.periodic([(lat, z + v) for lat, z in self.parts])

    def period_lattice(self) -> PlaneLattice:
        if not self.is_periodic:
            raise GeometryError("windowed patterns have no period lattice")
        return reduce(intersect, (lat for lat, _ in self.parts))

    def points_in(self, box: Box) -> list[tuple[PlaneVector, int]]:
        if self.is_periodic:
            out = []
            for lat, z in self.parts:
                for p in lattice_points_in_box(lat, box.shift(-z)):
                    out.append((p + z, 1))
            return out
        return self.pattern.points_in(box)


def lattice_points_in_box(lat: PlaneLattice, box: Box) -> list[PlaneVector]:
    """Exactly the lattice points inside the closed box."""
    if box.is_empty():
        return []
    corner_coords = [lat.coords(c) for c in box.corners()]
    a_vals = [c[0] for c in corner_coords]
    b_vals = [c[1] for c in corner_coords]
    alo, ahi = min(a_vals).ceil(), max(a_vals).floor()
    blo, bhi = min(b_vals).ceil(), max(b_vals).floor()
    out = []
    for a in range(alo, ahi + 1):
        for b in range(blo, bhi + 1):
            p = lat.point(a, b)
            if (
                (p.x - box.x0).sign() >= 0
                and (box.x1 - p.x).sign() >= 0
                and (p.y - box.y0).sign() >= 0
                and (box.y1 - p.y).sign() >= 0
            ):
                out.append(p)
    return out


def covering_at(poly: Polygon, tset: TranslateSet, x: PlaneVector) -> int:
    """The number of translates of poly whose interior contains x.

    Raises BoundaryError when x lies on some translate boundary; the
    covering function is only defined off that measure-zero set.
    """
    bb = poly.bbox
    search = Box(x.x - bb.x1, x.y - bb.y1, x.x - bb.x0, x.y - bb.y0)
    count = 0
    for lam, mult in tset.points_in(search):
        loc = poly.locate(x - lam)
        if loc == 0:
            raise BoundaryError(f"query point lies on the boundary of a translate at {lam}")
        if loc > 0:
            count += mult
    return count


@dataclass(frozen=True)
class VerifyReport:
    constant: bool
    multiplicity: int | None
    counterexample: tuple[tuple[PlaneVector, int], tuple[PlaneVector, int]] | None
    cells_checked: int
    window_relative: bool


# -- exact face sampling -------------------------------------------------------


class _Segment:
    __slots__ = ("p", "q", "xlo", "xhi", "ylo", "yhi")

    def __init__(self, p: PlaneVector, q: PlaneVector):
        self.p = p
        self.q = q
        self.xlo, self.xhi = (p.x, q.x) if (q.x - p.x).sign() >= 0 else (q.x, p.x)
        self.ylo, self.yhi = (p.y, q.y) if (q.y - p.y).sign() >= 0 else (q.y, p.y)

    def y_at(self, x: FieldElement) -> FieldElement:
        return self.p.y + (x - self.p.x) * (self.q.y - self.p.y) / (self.q.x - self.p.x)


def _dedup_sorted(values: list[FieldElement]) -> list[FieldElement]:
    values.sort()
    out = []
    for v in values:
        if not out or not (v - out[-1]).is_zero():
            out.append(v)
    return out


def _crossing_abscissas(segments: list[_Segment], xmin, xmax) -> list[FieldElement]:
    xs = []
    for i in range(len(segments)):
        si = segments[i]
        for j in range(i + 1, len(segments)):
            sj = segments[j]
            if (si.xhi - sj.xlo).sign() < 0 or (sj.xhi - si.xlo).sign() < 0:
                continue
            if (si.yhi - sj.ylo).sign() < 0 or (sj.yhi - si.ylo).sign() < 0:
                continue
            a = si.q - si.p
            b = sj.q - sj.p
            den = a.cross(b)
            if den.is_zero():
                continue
            c = sj.p - si.p
            t = c.cross(b) / den
            u = c.cross(a) / den
            if t.sign() < 0 or (t - 1).sign() > 0 or u.sign() < 0 or (u - 1).sign() > 0:
                continue
            x = si.p.x + t * a.x
            if (x - xmin).sign() >= 0 and (xmax - x).sign() >= 0:
                xs.append(x)
    return xs


class _Counter:
    """Covering counter over a fixed translate multiset with a cheap
    enclosure-based bounding box prefilter."""

    __slots__ = ("poly", "entries")

    def __init__(self, poly: Polygon, translates):
        self.poly = poly
        bb = poly.bbox
        self.entries = []
        for lam, mult in translates:
            shifted = bb.shift(lam)
            self.entries.append(
                (
                    lam,
                    mult,
                    shifted.x0.approx(24)[0],
                    shifted.x1.approx(24)[1],
                    shifted.y0.approx(24)[0],
                    shifted.y1.approx(24)[1],
                )
            )

    def count(self, pt: PlaneVector, on_boundary="raise") -> int:
        pxlo, pxhi = pt.x.approx(24)
        pylo, pyhi = pt.y.approx(24)
        total = 0
        for lam, mult, xlo, xhi, ylo, yhi in self.entries:
            if pxhi < xlo or pxlo > xhi or pyhi < ylo or pylo > yhi:
                continue
            loc = self.poly.locate(pt - lam)
            if loc == 0:
                if on_boundary == "raise":
                    raise BoundaryError("sample point on a translate boundary")
                return -1
            if loc > 0:
                total += mult
        return total


def _region_translates(poly: Polygon, tset: TranslateSet, region_bbox: Box):
    pb = poly.bbox
    search = Box(
        region_bbox.x0 - pb.x1,
        region_bbox.y0 - pb.y1,
        region_bbox.x1 - pb.x0,
        region_bbox.y1 - pb.y0,
    )
    return tset.points_in(search)


def _exact_face_samples(poly: Polygon, translates, region: Polygon):
    """One strictly interior sample point per arrangement face inside region."""
    counter = _Counter(poly, translates)
    segments = [_Segment(a, b) for a, b in region.edges()]
    seen = set()
    for lam, _ in translates:
        key = (lam.x, lam.y)
        if key in seen:
            continue
        seen.add(key)
        for a, b in poly.edges():
            segments.append(_Segment(a + lam, b + lam))
    rb = region.bbox
    xs = [rb.x0, rb.x1]
    for s in segments:
        for x in (s.p.x, s.q.x):
            if (x - rb.x0).sign() >= 0 and (rb.x1 - x).sign() >= 0:
                xs.append(x)
    xs.extend(_crossing_abscissas(segments, rb.x0, rb.x1))
    xs = _dedup_sorted(xs)
    samples = []
    for i in range(len(xs) - 1):
        xm = (xs[i] + xs[i + 1]) / 2
        ys = []
        for s in segments:
            if (xm - s.xlo).sign() > 0 and (s.xhi - xm).sign() > 0:
                ys.append(s.y_at(xm))
        ys = _dedup_sorted(ys)
        for k in range(len(ys) - 1):
            pt = PlaneVector(xm, (ys[k] + ys[k + 1]) / 2)
            if region.locate(pt) == 1:
                samples.append((pt, counter.count(pt)))
    return samples


def _report_from_samples(samples, window_relative: bool) -> VerifyReport:
    if not samples:
        raise WindowError("verification region contains no sample cells")
    lo = hi = 0
    for i, (_, c) in enumerate(samples):
        if c < samples[lo][1]:
            lo = i
        if c > samples[hi][1]:
            hi = i
    if samples[lo][1] == samples[hi][1]:
        return VerifyReport(True, samples[lo][1], None, len(samples), window_relative)
    return VerifyReport(False, None, (samples[lo], samples[hi]), len(samples), window_relative)


def _periodic_region(tset: TranslateSet) -> Polygon:
    period = tset.period_lattice()
    zero = period.field.zero()
    origin = PlaneVector(zero, zero)
    return Polygon([origin, period.b1, period.b1 + period.b2, period.b2])


def _windowed_region(poly: Polygon, tset: TranslateSet) -> Polygon:
    field = poly.field
    wx0, wy0, wx1, wy1 = (field.rational(w) for w in tset.pattern.window)
    pb = poly.bbox
    region = Box(wx0 + pb.x1, wy0 + pb.y1, wx1 + pb.x0, wy1 + pb.y0)
    if region.is_empty():
        raise WindowError("window is too small for the polygon's diameter margin")
    return Polygon(region.corners())


def verify_covering(
    poly: Polygon, tset: TranslateSet, mode: str = "exact", samples: int = 1000
) -> VerifyReport:
    """Certify (exact mode) or spot-check (sampled mode) covering constancy.

    Periodic sets are checked on one closed fundamental cell of the common
    period lattice, which certifies the whole plane.  Windowed patterns
    are checked on the window shrunk by the polygon's extent and the
    verdict is marked window-relative.
    """
    if mode not in ("exact", "sampled"):
        raise GeometryError(f"unknown mode {mode!r}")
    if tset.is_periodic:
        region = _periodic_region(tset)
        window_relative = False
    else:
        region = _windowed_region(poly, tset)
        window_relative = True
    translates = _region_translates(poly, tset, region.bbox)
    if mode == "exact":
        pts = _exact_face_samples(poly, translates, region)
        return _report_from_samples(pts, window_relative)
    counter = _Counter(poly, translates)
    rng = Random(_SAMPLED_SEED)
    rb = region.bbox
    dx = rb.x1 - rb.x0
    dy = rb.y1 - rb.y0
    collected = []
    attempts = 0
    grain = 1 << 20
    while len(collected) < samples:
        attempts += 1
        if attempts > 50 * samples:
            raise GeometryError("sampling failed to find interior points")
        pt = PlaneVector(
            rb.x0 + dx * Fraction(rng.randrange(1, grain), grain),
            rb.y0 + dy * Fraction(rng.randrange(1, grain), grain),
        )
        if region.locate(pt) != 1:
            continue
        c = counter.count(pt, on_boundary="skip")
        if c < 0:
            continue
        collected.append((pt, c))
    return _report_from_samples(collected, window_relative)


def strip_profile(poly: Polygon, lat: PlaneLattice, n_values) -> list[int]:
    """Covering count of poly + lat on each horizontal strip R x [n, n+1].

    The lattice must have a vertical second basis vector and a rational
    ratio between the vertical parts of its basis (which gives the strip
    covering a horizontal period); the profile is computed on one period
    per strip and each strip must cover constantly (non-constant strips
    are reported as an error, never averaged).
    """
    if not lat.b2.x.is_zero():
        raise GeometryError("lattice is not axis-compatible (vertical second basis vector)")
    ratio = (lat.b1.y / lat.b2.y).rational_value()
    if ratio is None:
        raise GeometryError("lattice has no horizontal period (irrational basis ratio)")
    period = abs(lat.b1.x * ratio.denominator)
    field = poly.field
    tset = TranslateSet.periodic([(lat, PlaneVector(field.zero(), field.zero()))])
    out = []
    for n in n_values:
        region = Polygon(
            Box(field.zero(), field.rational(n), period, field.rational(n + 1)).corners()
        )
        translates = _region_translates(poly, tset, region.bbox)
        pts = _exact_face_samples(poly, translates, region)
        counts = {c for _, c in pts}
        if len(counts) != 1:
            raise GeometryError(f"covering is not constant on strip [{n}, {n + 1}]: counts {sorted(counts)}")
        out.append(counts.pop())
    return out
