from pathlib import Path

from triord.constructions import gallery, pentagon_family
from triord.svg import render_svg

GOLDEN = Path(__file__).parent / "data" / "pentagram.svg"


def _pentagram_family():
    for e in gallery():
        if e.id == "fig8a":
            return e.family
    raise AssertionError("fig8a missing")


def test_pentagon_renders_six_polygons():
    doc = render_svg(pentagon_family(48))
    assert doc.count("<polygon") == 6
    assert doc.count("<text") == 6
    assert doc.startswith("<?xml")


def test_segments_render_as_lines():
    fam = _pentagram_family()  # five segment bodies
    doc = render_svg(fam)
    assert doc.count("<line") == 5
    assert doc.count("<polygon") == 0


def test_render_deterministic_bytes():
    fam = _pentagram_family()
    assert render_svg(fam) == render_svg(fam)


def test_render_matches_golden_file():
    doc = render_svg(_pentagram_family())
    assert doc == GOLDEN.read_text(encoding="utf-8")


def test_point_body_renders_circle():
    from triord.geom import Point, convex_hull
    from triord.orient import Family

    fam = Family(
        "dot",
        ("P", "Q"),
        (
            convex_hull([Point.of(0, 0)]),
            convex_hull([Point.of(0, 0), Point.of(1, 0), Point.of(0, 1)]),
        ),
    )
    doc = render_svg(fam)
    assert doc.count("<circle") == 1
    assert doc.count("<polygon") == 1
