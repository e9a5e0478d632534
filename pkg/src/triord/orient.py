"""Orientation of triples of pairwise-intersecting convex bodies.

The sign of a triple is zero when the three bodies share a point; otherwise
it is the orientation of any witness triangle x in B&C, y in A&C, z in A&B,
which is independent of the witness choice.  Also extracts abstract triple
systems from point sets and from slope-ordered lines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .geom import ConvexBody, Point, common_intersection, intersect, orient_points
from .p3o import TripleSystemError, TripleSystem


class OrientationError(ValueError):
    """Raised when a triple violates the preconditions of the orientation."""


@dataclass(frozen=True)
class Family:
    """A named, ordered family of labeled convex bodies."""

    name: str
    labels: tuple[str, ...]
    bodies: tuple[ConvexBody, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.bodies):
            raise ValueError("labels and bodies must have the same length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")

    def __len__(self) -> int:
        return len(self.bodies)

    def body(self, label: str) -> ConvexBody:
        return self.bodies[self.labels.index(label)]

    def pairwise_intersecting(self) -> bool:
        return all(
            intersect(a, b) is not None
            for a, b in itertools.combinations(self.bodies, 2)
        )

    def holey(self) -> bool:
        """Pairwise intersecting with no three bodies sharing a point."""
        return self.pairwise_intersecting() and all(
            common_intersection([a, b, c]) is None
            for a, b, c in itertools.combinations(self.bodies, 3)
        )


def triple_orientation(a: ConvexBody, b: ConvexBody, c: ConvexBody) -> int:
    """Orientation in {-1, 0, +1} of three pairwise-intersecting bodies.

    Zero iff the three bodies have a common point.  Otherwise the sign of
    the witness triangle taken at the lexicographically smallest vertex of
    each pairwise intersection region (any witnesses give the same sign).
    """
    ab = intersect(a, b)
    ac = intersect(a, c)
    bc = intersect(b, c)
    if ab is None or ac is None or bc is None:
        raise OrientationError("not pairwise intersecting")
    if intersect(ab, c) is not None:
        return 0
    x = bc.vertices[0]  # canonical order puts the lex-min vertex first
    y = ac.vertices[0]
    z = ab.vertices[0]
    s = orient_points(x, y, z)
    if s == 0:
        raise OrientationError("collinear witnesses (kernel bug or invalid bodies)")
    return s


def family_profile(family: Family) -> TripleSystem:
    """TripleSystem of all triple orientations of a pairwise-intersecting family."""
    n = len(family)
    signs = []
    for i, j, k in itertools.combinations(range(n), 3):
        try:
            signs.append(
                triple_orientation(family.bodies[i], family.bodies[j], family.bodies[k])
            )
        except OrientationError as exc:
            names = (family.labels[i], family.labels[j], family.labels[k])
            raise OrientationError(f"triple {names}: {exc}") from None
    return TripleSystem(family.labels, tuple(signs))


def points_to_p3o(
    points: Sequence[tuple[str, Point]],
) -> TripleSystem:
    """Order type of a labeled planar point set (collinear triples give 0)."""
    labels = tuple(lab for lab, _ in points)
    if len(set(labels)) != len(labels):
        raise TripleSystemError("duplicate labels")
    ps = [p for _, p in points]
    if len(set(ps)) != len(ps):
        raise TripleSystemError("coincident points")
    signs = tuple(
        orient_points(ps[i], ps[j], ps[k])
        for i, j, k in itertools.combinations(range(len(ps)), 3)
    )
    return TripleSystem(labels, signs)


VERTICAL = "vertical"
Slope = Union[Fraction, int, str]


def _slope_key(s: Slope) -> tuple[int, Fraction]:
    if s == VERTICAL:
        return (1, Fraction(0))
    return (0, Fraction(s))


def lines_to_t3o(slopes: Sequence[tuple[str, Slope]]) -> TripleSystem:
    """Orientation profile of lines in general slope position.

    Lines ordered clockwise by slope correspond to points in convex
    position ordered counterclockwise; the slope circle descends from the
    vertical through positive to negative slopes.  Vertical lines are
    passed as the token "vertical".
    """
    if len(slopes) < 3:
        raise TripleSystemError("need at least 3 lines")
    keys = [_slope_key(s) for _, s in slopes]
    if len(set(keys)) != len(keys):
        raise TripleSystemError("duplicate slopes")
    # clockwise circular slope order: vertical first, then decreasing slope
    order = sorted(
        range(len(slopes)),
        key=lambda i: (-keys[i][0], -keys[i][1]),
    )
    # the i-th line in clockwise slope order becomes the i-th point
    # counterclockwise on a convex curve
    pos = {idx: rank for rank, idx in enumerate(order)}
    pts = [
        (slopes[i][0], Point(Fraction(pos[i]), Fraction(pos[i] * pos[i])))
        for i in range(len(slopes))
    ]
    return points_to_p3o(pts)
