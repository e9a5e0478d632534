import random
from fractions import Fraction

import pytest

from triord.geom import (
    ConvexBody,
    GeometryError,
    Point,
    circle_polygon,
    common_intersection,
    convex_hull,
    intersect,
    orient_points,
)
from util import random_convex_body

P = Point.of


def test_orient_points_examples():
    assert orient_points(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient_points(P(0, 0), P(1, 1), P(2, 2)) == 0
    assert orient_points(P(0, 0), P(0, 1), P(1, 0)) == -1


def test_orient_points_antisymmetry():
    rng = random.Random(1)
    for _ in range(300):
        p, q, r = (
            P(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(3)
        )
        assert orient_points(p, q, r) == -orient_points(p, r, q)
        assert orient_points(p, q, r) == orient_points(q, r, p)


def test_hull_discards_interior_point():
    body = convex_hull([P(0, 0), P(1, 0), P(1, 1), P(0, 1), P("1/2", "1/2")])
    assert body.vertices == (P(0, 0), P(1, 0), P(1, 1), P(0, 1))


def test_hull_degenerate_cases():
    assert convex_hull([P(0, 0), P(0, 0)]).vertices == (P(0, 0),)
    assert convex_hull([P(0, 0), P(1, 0), P(2, 0)]).vertices == (P(0, 0), P(2, 0))
    with pytest.raises(GeometryError, match="empty point set"):
        convex_hull([])


def test_hull_canonical_start_and_ccw():
    rng = random.Random(2)
    for _ in range(100):
        pts = [P(rng.randint(-15, 15), rng.randint(-15, 15)) for _ in range(8)]
        body = convex_hull(pts)
        assert body.vertices[0] == min(body.vertices)
        n = len(body.vertices)
        if n >= 3:
            for i in range(n):
                a, b, c = (
                    body.vertices[i],
                    body.vertices[(i + 1) % n],
                    body.vertices[(i + 2) % n],
                )
                assert orient_points(a, b, c) == 1


def test_body_validation():
    with pytest.raises(GeometryError):
        ConvexBody((P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0)))
    with pytest.raises(GeometryError, match="strictly convex"):
        ConvexBody((P(0, 0), P(0, 1), P(1, 1), P(1, 0)))  # clockwise


def test_intersect_axis_aligned_overlap():
    a = convex_hull([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
    b = convex_hull([P("1/2", "1/2"), P("3/2", "1/2"), P("3/2", "3/2"), P("1/2", "3/2")])
    got = intersect(a, b)
    assert got.vertices == (
        P("1/2", "1/2"),
        P(1, "1/2"),
        P(1, 1),
        P("1/2", 1),
    )


def test_intersect_corner_touch_and_disjoint():
    a = convex_hull([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
    c = convex_hull([P(1, 1), P(2, 1), P(2, 2), P(1, 2)])
    assert intersect(a, c).vertices == (P(1, 1),)
    d = convex_hull([P(2, 0), P(3, 0), P(3, 1), P(2, 1)])
    assert intersect(a, d) is None


def test_intersect_commutative_and_subset():
    rng = random.Random(3)
    for _ in range(120):
        a = random_convex_body(rng, center=(rng.randint(-3, 3), 0), spread=7)
        b = random_convex_body(rng, center=(rng.randint(-3, 3), 0), spread=7)
        ab = intersect(a, b)
        assert ab == intersect(b, a)
        if ab is not None:
            for v in ab.vertices:
                assert a.contains(v) and b.contains(v)


def test_segment_cases():
    s1 = convex_hull([P(0, 0), P(2, 2)])
    s2 = convex_hull([P(0, 2), P(2, 0)])
    assert intersect(s1, s2).vertices == (P(1, 1),)
    s3 = convex_hull([P(1, 1), P(3, 3)])
    assert intersect(s1, s3).vertices == (P(1, 1), P(2, 2))
    assert intersect(s1, convex_hull([P(3, 4), P(4, 5)])) is None
    sq = convex_hull([P(0, 0), P(4, 0), P(4, 4), P(0, 4)])
    assert intersect(sq, convex_hull([P(-1, 2), P(5, 2)])).vertices == (P(0, 2), P(4, 2))


def test_common_intersection():
    sq = convex_hull([P(0, 0), P(2, 0), P(2, 2), P(0, 2)])
    assert common_intersection([sq]) == sq
    far = convex_hull([P(5, 5), P(6, 5), P(6, 6)])
    assert common_intersection([sq, far]) is None
    squares = [
        convex_hull([P(0, 0), P(2, 0), P(2, 2), P(0, 2)]),
        convex_hull([P(1, 0), P(3, 0), P(3, 2), P(1, 2)]),
        convex_hull([P(0, 1), P(2, 1), P(2, 3), P(0, 3)]),
    ]
    region = common_intersection(squares)
    assert region is not None and region.contains(P(1, 1))


def test_common_intersection_monotone_under_superfamily():
    rng = random.Random(4)
    for _ in range(60):
        bodies = [
            random_convex_body(rng, center=(rng.randint(-2, 2), rng.randint(-2, 2)), spread=8)
            for _ in range(4)
        ]
        small = common_intersection(bodies)
        big = common_intersection(bodies[:3])
        if small is not None:
            assert big is not None
            for v in small.vertices:
                assert big.contains(v)


def test_helly_consistency_random_families():
    # families whose triples all intersect must have a global common point
    import itertools

    rng = random.Random(5)
    tested = 0
    while tested < 200:
        n = rng.randint(3, 8)
        bodies = [
            random_convex_body(rng, center=(rng.randint(-3, 3), rng.randint(-3, 3)), spread=9)
            for _ in range(n)
        ]
        if any(
            common_intersection([bodies[i], bodies[j], bodies[k]]) is None
            for i, j, k in itertools.combinations(range(n), 3)
        ):
            continue
        tested += 1
        assert common_intersection(bodies) is not None


def test_circle_polygon_on_circle():
    c = P(1, 2)
    r = Fraction(3, 2)
    body = circle_polygon(c, r, 24)
    assert len(body.vertices) == 24
    for v in body.vertices:
        assert (v.x - c.x) ** 2 + (v.y - c.y) ** 2 == r * r
