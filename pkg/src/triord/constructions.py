"""Generators and a verified gallery of concrete configurations.

Covers the grid system with the (4,3) property, the pentagon family whose
trace digraph has a directed 5-cycle, the square-plus-center point system,
the inextendible four-disk family, and the gallery of realization data
shipped with the package.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .geom import GeometryError, Point, circle_polygon, convex_hull
from .orient import Family, family_profile, points_to_p3o
from .p3o import TripleSystemError, TripleSystem


def grid_hypergraph(k: int) -> TripleSystem:
    """System on the k x k grid whose nonzero triples pair two cells of one
    column with a cell of a later column.

    Labels are "(i,j)" in row-major order.  A triple is nonzero exactly when
    two elements share the first coordinate and the third has a larger one;
    the sign is +1 when, in that reading, the smaller second coordinate comes
    first.  The resulting system has the (4,3) property and its largest
    0-clique has 2k-1 vertices.
    """
    if k < 2:
        raise TripleSystemError("grid needs k >= 2")
    cells = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    labels = tuple(f"({i},{j})" for i, j in cells)
    signs = []
    for x, y, z in itertools.combinations(range(len(cells)), 3):
        ix, iy, iz = cells[x][0], cells[y][0], cells[z][0]
        # row-major order sorts by first coordinate, then second; the only
        # nonzero pattern i_x = i_y < i_z then always has j_x < j_y
        signs.append(1 if ix == iy < iz else 0)
    return TripleSystem(labels, tuple(signs))


PENTAGON_LABELS = ("A1", "A2", "A3", "A4", "A5", "D")

# rational snapshot of the regular pentagon with unit side, in the drawing
# order v1 v4 v2 v5 v3 around the boundary
_PENTAGON_V = {
    1: Point.of("0", "0"),
    4: Point.of("1", "0"),
    2: Point.of("1.3090169943749475", "0.9510565162951532"),
    5: Point.of("0.5", "1.5388417685876266"),
    3: Point.of("-0.30901699437494734", "0.9510565162951536"),
}
_INCENTER = Point.of("0.5", "0.6881909602355868")
_INRADIUS = Fraction("0.688190960235586")


def pentagon_family(disk_sides: int = 48) -> Family:
    """Five triangles on pentagon vertices plus an inscribed-disk polygon.

    Triangle i spans vertices i+2, i, i-2 (mod 5); consecutive triangles
    share a single pentagon vertex, so consecutive triples with the disk
    are nonzero while every other triple meets at a shared point.
    """
    if disk_sides < 12:
        raise GeometryError("disk_sides too small to preserve the intersections")

    def wrap(i: int) -> int:
        return (i - 1) % 5 + 1

    bodies = []
    for i in range(1, 6):
        tri = convex_hull(
            [_PENTAGON_V[wrap(i + 2)], _PENTAGON_V[i], _PENTAGON_V[wrap(i - 2)]]
        )
        bodies.append(tri)
    disk = circle_polygon(_INCENTER, _INRADIUS, disk_sides)
    fam = Family("pentagon", PENTAGON_LABELS, tuple(bodies) + (disk,))
    if not fam.pairwise_intersecting():
        raise GeometryError("disk_sides too small to preserve the intersections")
    return fam


SQUARE_CENTER_LABELS = ("A1", "A2", "A3", "A4", "D")


def square_center_p3o() -> TripleSystem:
    """Order type of the unit-square corners plus the diagonal crossing."""
    pts = [
        ("A1", Point.of(0, 1)),
        ("A2", Point.of(0, 0)),
        ("A3", Point.of(1, 0)),
        ("A4", Point.of(1, 1)),
        ("D", Point.of("1/2", "1/2")),
    ]
    return points_to_p3o(pts)


def inextendible_disks(
    disk_sides: int = 48, small_radius: Fraction = Fraction(41, 100)
) -> Family:
    """Three large disks around an equilateral-ish triangle plus a small
    central disk: a holey family that admits no holey extension.

    Disks are inscribed regular polygons (vertices on the circle), so the
    approximation only shrinks each set; the construction verifies holey-ness
    and rejects parameters that break it.
    """
    if disk_sides < 24:
        raise GeometryError("disk_sides too small for the disk approximation")
    big_r = Fraction(31, 20)
    centers = [
        Point.of(0, 0),
        Point.of(3, 0),
        Point.of("3/2", "2.598076"),
    ]
    centroid = Point(
        sum(c.x for c in centers) / 3, sum(c.y for c in centers) / 3
    )
    bodies = [circle_polygon(c, big_r, disk_sides) for c in centers]
    bodies.append(circle_polygon(centroid, small_radius, disk_sides))
    fam = Family("holey-disks", ("A", "B", "C", "D"), tuple(bodies))
    if not fam.holey():
        raise GeometryError(
            "approximation failed holey-ness; increase disk_sides or adjust radii"
        )
    return fam


@dataclass(frozen=True)
class GalleryEntry:
    """A concrete configuration with its target system and expected checks."""

    id: str
    tags: tuple[str, ...]
    source: str
    system: TripleSystem
    family: Optional[Family] = None
    expected_checks: tuple[tuple[str, str], ...] = ()
    notes: str = ""


def _load_json(name: str):
    base = resources.files("triord").joinpath("data", "gallery")
    with base.joinpath(name).open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _family_from_doc(doc) -> Family:
    from .files import family_from_document

    return family_from_document(doc)


def _system_from_doc(doc) -> TripleSystem:
    from .files import system_from_document

    return system_from_document(doc)


def gallery() -> list[GalleryEntry]:
    """Every shipped configuration, data-file entries plus generated ones."""
    entries: list[GalleryEntry] = []
    index = _load_json("index.json")
    for item in index["entries"]:
        family = None
        if item.get("family_file"):
            family = _family_from_doc(_load_json(item["family_file"]))
        system = _system_from_doc(_load_json(item["system_file"]))
        entries.append(
            GalleryEntry(
                id=item["id"],
                tags=tuple(item.get("tags", ())),
                source=item.get("source", ""),
                system=system,
                family=family,
                expected_checks=tuple(
                    (law, outcome) for law, outcome in item.get("expected_checks", ())
                ),
                notes=item.get("notes", ""),
            )
        )

    pentagon = pentagon_family()
    entries.append(
        GalleryEntry(
            id="fig14",
            tags=("pentagon", "five-cycle"),
            source="pentagon with inscribed disk",
            system=family_profile(pentagon),
            family=pentagon,
            expected_checks=(("four-three", "pass"),),
        )
    )
    disks = inextendible_disks()
    entries.append(
        GalleryEntry(
            id="fig7",
            tags=("holey-disks",),
            source="four-disk holey family",
            system=family_profile(disks),
            family=disks,
            expected_checks=(("interiority", "pass"),),
            notes="inextendibility itself quantifies over all convex sets; "
            "only holey-ness is machine-checked",
        )
    )
    entries.append(
        GalleryEntry(
            id="fig11",
            tags=("square-center",),
            source="square corners plus diagonal crossing",
            system=square_center_p3o(),
            family=None,
            expected_checks=(
                ("interiority", "pass"),
                ("zero-propagation", "pass"),
            ),
            notes="provably not realizable by intersecting convex sets; "
            "the non-realizability proof is not machine-checked",
        )
    )
    return entries
