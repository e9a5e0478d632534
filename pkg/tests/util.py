"""Shared random-instance generators for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from triord.geom import ConvexBody, Point, common_intersection, convex_hull, intersect
from triord.geom import _clip  # test-only: halfplane clipping of a body
from triord.orient import Family


def random_convex_body(
    rng: random.Random,
    center: tuple[int, int] = (0, 0),
    spread: int = 8,
    max_points: int = 7,
    min_points: int = 3,
) -> ConvexBody:
    cx, cy = center
    k = rng.randint(min_points, max_points)
    pts = [
        Point(Fraction(cx + rng.randint(-spread, spread)), Fraction(cy + rng.randint(-spread, spread)))
        for _ in range(k)
    ]
    return convex_hull(pts)


def random_pairwise_intersecting_family(
    rng: random.Random, n: int, name: str = "random"
) -> Family:
    labels = tuple(f"S{i}" for i in range(n))
    while True:
        bodies = tuple(
            random_convex_body(
                rng, center=(rng.randint(-4, 4), rng.randint(-4, 4)), spread=9
            )
            for _ in range(n)
        )
        fam = Family(name, labels, bodies)
        if fam.pairwise_intersecting():
            return fam


def random_holey_triple(rng: random.Random) -> tuple[ConvexBody, ConvexBody, ConvexBody]:
    """Three pairwise-intersecting bodies with no common point."""
    while True:
        bodies = [
            random_convex_body(
                rng, center=(rng.randint(-8, 8), rng.randint(-8, 8)), spread=9
            )
            for _ in range(3)
        ]
        if any(
            intersect(bodies[i], bodies[j]) is None
            for i, j in ((0, 1), (0, 2), (1, 2))
        ):
            continue
        if common_intersection(bodies) is None:
            return tuple(bodies)


def clip_halfplane(body: ConvexBody, a: Fraction, b: Fraction, c: Fraction):
    """body intersected with the halfplane a*x + b*y <= c, or None."""
    pts = _clip(list(body.vertices), (a, b, c))
    return convex_hull(pts) if pts else None


def random_point_in(body: ConvexBody, rng: random.Random) -> Point:
    """Random rational convex combination of the body's vertices."""
    weights = [Fraction(rng.randint(1, 10)) for _ in body.vertices]
    total = sum(weights)
    x = sum(w * v.x for w, v in zip(weights, body.vertices)) / total
    y = sum(w * v.y for w, v in zip(weights, body.vertices)) / total
    return Point(x, y)
