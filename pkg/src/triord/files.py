"""Serialization of families and triple systems.

Coordinates are rational strings ("p/q" or decimal), so a save/load round
trip is exact.  Parse errors carry the offending body or triple.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .geom import ConvexBody, Point, convex_hull, orient_points
from .orient import Family
from .p3o import TripleSystem

PathLike = Union[str, Path]


class FileFormatError(ValueError):
    """Malformed family or system document."""


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_rational(text, where: str) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise FileFormatError(f"{where}: cannot parse rational {text!r}") from None
    raise FileFormatError(f"{where}: rational must be a string, got {type(text).__name__}")


def _body_from_vertices(raw, where: str) -> ConvexBody:
    if not isinstance(raw, list) or not raw:
        raise FileFormatError(f"{where}: vertices must be a nonempty list")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FileFormatError(f"{where}: vertex {i} must be an [x, y] pair")
        pts.append(
            Point(
                _parse_rational(pair[0], f"{where} vertex {i} x"),
                _parse_rational(pair[1], f"{where} vertex {i} y"),
            )
        )
    hull = convex_hull(pts)
    n = len(pts)
    if n >= 3 and all(
        orient_points(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) < 0
        for i in range(n)
    ):
        raise FileFormatError(f"{where}: vertices are clockwise, expected CCW")
    if len(hull.vertices) != n:
        raise FileFormatError(f"{where}: vertices not strictly convex CCW")
    # accept any rotation of the CCW cycle; storage is canonical
    k = pts.index(hull.vertices[0])
    if tuple(pts[k:] + pts[:k]) != hull.vertices:
        raise FileFormatError(f"{where}: vertices not strictly convex CCW")
    return hull


def family_from_document(doc) -> Family:
    if not isinstance(doc, dict):
        raise FileFormatError("family document must be an object")
    name = doc.get("name")
    if not isinstance(name, str):
        raise FileFormatError("family document needs a 'name' string")
    bodies_raw = doc.get("bodies")
    if not isinstance(bodies_raw, list) or not bodies_raw:
        raise FileFormatError("family document needs a nonempty 'bodies' list")
    labels = []
    bodies = []
    for i, entry in enumerate(bodies_raw):
        if not isinstance(entry, dict) or "label" not in entry:
            raise FileFormatError(f"body {i}: needs a 'label'")
        label = entry["label"]
        labels.append(label)
        bodies.append(_body_from_vertices(entry.get("vertices"), f"body {label!r}"))
    if len(set(labels)) != len(labels):
        raise FileFormatError("body labels must be unique")
    return Family(name, tuple(labels), tuple(bodies))


def family_to_document(family: Family) -> dict:
    return {
        "name": family.name,
        "bodies": [
            {
                "label": label,
                "vertices": [[_fmt(v.x), _fmt(v.y)] for v in body.vertices],
            }
            for label, body in zip(family.labels, family.bodies)
        ],
    }


def load_family(path: PathLike) -> Family:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno}") from None
    return family_from_document(doc)


def save_family(family: Family, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(family_to_document(family), fh, indent=1)
        fh.write("\n")


def system_from_document(doc) -> TripleSystem:
    if not isinstance(doc, dict):
        raise FileFormatError("system document must be an object")
    labels = doc.get("labels")
    if not isinstance(labels, list) or len(set(labels)) != len(labels):
        raise FileFormatError("system document needs a list of unique 'labels'")
    n = len(labels)
    combs = list(itertools.combinations(range(n), 3))
    store: dict[tuple[int, int, int], int] = {}
    for row in doc.get("triples", []):
        if not isinstance(row, list) or len(row) != 4:
            raise FileFormatError(f"triple row {row!r} must be [i, j, k, s]")
        i, j, k, s = row
        if not (isinstance(i, int) and isinstance(j, int) and isinstance(k, int)):
            raise FileFormatError(f"triple row {row!r}: indices must be integers")
        if not 0 <= i < j < k < n:
            raise FileFormatError(f"triple row {row!r}: need 0 <= i < j < k < n")
        if s not in (-1, 0, 1):
            raise FileFormatError(f"triple row {row!r}: sign must be -1, 0 or 1")
        if (i, j, k) in store:
            raise FileFormatError(f"triple ({i},{j},{k}) assigned twice")
        store[(i, j, k)] = s
    if len(store) < len(combs):
        if doc.get("default", None) != 0:
            raise FileFormatError(
                "omitted triples require an explicit \"default\": 0 key"
            )
    signs = tuple(store.get(c, 0) for c in combs)
    return TripleSystem(tuple(labels), signs)


def system_to_document(sys: TripleSystem) -> dict:
    triples = [[i, j, k, s] for (i, j, k), s in sys.triples() if s != 0]
    doc = {"labels": list(sys.labels), "triples": triples}
    if len(triples) < len(sys.signs):
        doc["default"] = 0
    return doc


def load_system(path: PathLike) -> TripleSystem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno}") from None
    return system_from_document(doc)


def save_system(sys: TripleSystem, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(system_to_document(sys), fh, indent=1)
        fh.write("\n")
