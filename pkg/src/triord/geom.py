"""Exact rational planar geometry kernel.

Points, convex bodies (possibly degenerate), hulls, convex-convex clipping
and sign predicates.  Every coordinate is a ``fractions.Fraction``; no
floating point enters any predicate, so every sign decision is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

RationalLike = Union[Fraction, int, str]


def rational(value: RationalLike) -> Fraction:
    """Coerce ints, 'p/q' strings and decimal strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True, order=True)
class Point:
    """An exact point in the plane.  Ordering is lexicographic (x, then y)."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RationalLike, y: RationalLike) -> "Point":
        return Point(rational(x), rational(y))

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


def _sign(v: Fraction) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def orient_points(p: Point, q: Point, r: Point) -> int:
    """Signed-area orientation: +1 counterclockwise, -1 clockwise, 0 collinear."""
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


class GeometryError(ValueError):
    """Invalid geometric input (empty point set, malformed body, ...)."""


@dataclass(frozen=True)
class ConvexBody:
    """A compact convex set as its hull vertices in canonical order.

    One vertex is a point, two a segment, three or more a strictly convex
    polygon in counterclockwise order.  Canonical order starts at the
    lexicographically smallest vertex, so structural equality is exact
    set equality.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if not vs:
            raise GeometryError("empty point set")
        if len(set(vs)) != len(vs):
            raise GeometryError("duplicate vertices")
        if min(vs) != vs[0]:
            raise GeometryError("vertices not in canonical order")
        if len(vs) >= 3:
            n = len(vs)
            for i in range(n):
                if orient_points(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0:
                    raise GeometryError("vertices not strictly convex CCW")

    @staticmethod
    def from_points(points: Iterable[Point]) -> "ConvexBody":
        return convex_hull(list(points))

    @property
    def dimension(self) -> int:
        """0 for a point, 1 for a segment, 2 for a polygon."""
        return min(len(self.vertices) - 1, 2)

    def contains(self, p: Point) -> bool:
        vs = self.vertices
        if len(vs) == 1:
            return vs[0] == p
        if len(vs) == 2:
            if orient_points(vs[0], vs[1], p) != 0:
                return False
            d = (vs[1].x - vs[0].x, vs[1].y - vs[0].y)
            t = (p.x - vs[0].x) * d[0] + (p.y - vs[0].y) * d[1]
            return 0 <= t <= d[0] * d[0] + d[1] * d[1]
        n = len(vs)
        return all(orient_points(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def vertex_mean(self) -> Point:
        n = len(self.vertices)
        sx = sum(v.x for v in self.vertices)
        sy = sum(v.y for v in self.vertices)
        return Point(Fraction(sx, n), Fraction(sy, n))


def _canonical(cycle: Sequence[Point]) -> tuple[Point, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def convex_hull(points: Sequence[Point]) -> ConvexBody:
    """Exact convex hull; degenerate inputs collapse to a point or segment."""
    if not points:
        raise GeometryError("empty point set")
    pts = sorted(set(points))
    if len(pts) == 1:
        return ConvexBody((pts[0],))
    if all(orient_points(pts[0], pts[-1], p) == 0 for p in pts):
        return ConvexBody((pts[0], pts[-1]))

    def half(seq: Sequence[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orient_points(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    cycle = lower[:-1] + upper[:-1]
    return ConvexBody(_canonical(cycle))


# A closed halfplane a*x + b*y <= c.
Halfplane = tuple[Fraction, Fraction, Fraction]


def _halfplanes(body: ConvexBody) -> list[Halfplane]:
    vs = body.vertices
    if len(vs) == 1:
        p = vs[0]
        one = Fraction(1)
        return [
            (one, Fraction(0), p.x),
            (-one, Fraction(0), -p.x),
            (Fraction(0), one, p.y),
            (Fraction(0), -one, -p.y),
        ]
    if len(vs) == 2:
        p, q = vs
        dx, dy = q.x - p.x, q.y - p.y
        # the carrier line from both sides, then the two endpoint slabs
        return [
            (-dy, dx, -dy * p.x + dx * p.y),
            (dy, -dx, dy * p.x - dx * p.y),
            (-dx, -dy, -dx * p.x - dy * p.y),
            (dx, dy, dx * q.x + dy * q.y),
        ]
    out = []
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        dx, dy = q.x - p.x, q.y - p.y
        # interior of a CCW polygon is to the left of each directed edge
        out.append((dy, -dx, dy * p.x - dx * p.y))
    return out


def _clip(points: list[Point], hp: Halfplane) -> list[Point]:
    """Sutherland-Hodgman step of a convex vertex cycle against one halfplane."""
    a, b, c = hp
    if not points:
        return []
    if len(points) == 1:
        p = points[0]
        return points if a * p.x + b * p.y <= c else []
    vals = [c - (a * p.x + b * p.y) for p in points]
    out: list[Point] = []
    n = len(points)
    for i in range(n):
        p, vp = points[i], vals[i]
        q, vq = points[(i + 1) % n], vals[(i + 1) % n]
        if vp >= 0:
            out.append(p)
        if (vp > 0 > vq) or (vq > 0 > vp):
            t = vp / (vp - vq)
            out.append(Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    return out


def intersect(a: ConvexBody, b: ConvexBody) -> Optional[ConvexBody]:
    """Exact intersection of two convex bodies, or None when disjoint.

    Boundary contact counts: compact convex sets that merely touch still
    intersect in a point or segment.
    """
    points = list(a.vertices)
    for hp in _halfplanes(b):
        points = _clip(points, hp)
        if not points:
            return None
    return convex_hull(points)


def common_intersection(family: Sequence[ConvexBody]) -> Optional[ConvexBody]:
    """Iterated clipping of a nonempty family; None iff no common point."""
    if not family:
        raise GeometryError("empty point set")
    acc: Optional[ConvexBody] = family[0]
    for body in family[1:]:
        acc = intersect(acc, body)
        if acc is None:
            return None
    return acc


def circle_polygon(center: Point, radius: Fraction, sides: int) -> ConvexBody:
    """Inscribed polygon with rational vertices exactly on the given circle.

    Uses the tangent half-angle parametrization: for rational t, the point
    (1-t^2, 2t)/(1+t^2) lies exactly on the unit circle.  The t values are
    rational approximations of an even angular spacing, so the polygon is
    a near-regular inscribed approximation of the disk (never larger).
    """
    import math

    if sides < 3:
        raise GeometryError("need at least 3 sides")
    pts = []
    for k in range(sides):
        theta = math.pi * (2 * k - sides) / sides
        if abs(theta + math.pi) < 1e-12:
            pts.append(Point(center.x - radius, center.y))
            continue
        t = Fraction(math.tan(theta / 2)).limit_denominator(10**6)
        den = 1 + t * t
        pts.append(
            Point(
                center.x + radius * (1 - t * t) / den,
                center.y + radius * 2 * t / den,
            )
        )
    return convex_hull(pts)
