"""Deterministic SVG rendering of families.

Translucent filled regions with a label at each body's vertex mean, in a
viewport fitted to the family with a 5% margin.  Output bytes depend only
on the input family and options; coordinates are emitted with 6 significant
digits (rendering is a sink, never read back into predicates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orient import Family

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#e377c2",
)


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    fill_opacity: str = "0.25"
    stroke_width_frac: float = 0.004
    font_frac: float = 0.04


def _g(v: float) -> str:
    return f"{v:.6g}"


def render_svg(family: Family, options: RenderOptions = RenderOptions()) -> str:
    """Render one translucent shape per body, in input order."""
    xs_min = min(min(v.x for v in b.vertices) for b in family.bodies)
    xs_max = max(max(v.x for v in b.vertices) for b in family.bodies)
    ys_min = min(min(v.y for v in b.vertices) for b in family.bodies)
    ys_max = max(max(v.y for v in b.vertices) for b in family.bodies)
    span_x = xs_max - xs_min or Fraction(1)
    span_y = ys_max - ys_min or Fraction(1)
    margin_x = span_x / 20
    margin_y = span_y / 20
    x0, y0 = xs_min - margin_x, ys_min - margin_y
    w, h = span_x + 2 * margin_x, span_y + 2 * margin_y
    scale = options.width / float(w)
    height = float(h) * scale

    def tx(p) -> tuple[float, float]:
        # flip y so the drawing uses mathematical orientation
        return (
            (float(p.x) - float(x0)) * scale,
            height - (float(p.y) - float(y0)) * scale,
        )

    stroke = options.width * options.stroke_width_frac
    font = options.width * options.font_frac
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_g(options.width)}" height="{_g(height)}" '
        f'viewBox="0 0 {_g(options.width)} {_g(height)}">',
    ]
    for i, (label, body) in enumerate(zip(family.labels, family.bodies)):
        color = _PALETTE[i % len(_PALETTE)]
        pts = [tx(v) for v in body.vertices]
        if len(pts) == 1:
            (cx, cy) = pts[0]
            out.append(
                f'<circle cx="{_g(cx)}" cy="{_g(cy)}" r="{_g(stroke * 2)}" '
                f'fill="{color}"/>'
            )
        elif len(pts) == 2:
            (x1, y1), (x2, y2) = pts
            out.append(
                f'<line x1="{_g(x1)}" y1="{_g(y1)}" x2="{_g(x2)}" y2="{_g(y2)}" '
                f'stroke="{color}" stroke-width="{_g(stroke)}"/>'
            )
        else:
            coords = " ".join(f"{_g(x)},{_g(y)}" for x, y in pts)
            out.append(
                f'<polygon points="{coords}" fill="{color}" '
                f'fill-opacity="{options.fill_opacity}" stroke="{color}" '
                f'stroke-width="{_g(stroke)}"/>'
            )
        (lx, ly) = tx(body.vertex_mean())
        out.append(
            f'<text x="{_g(lx)}" y="{_g(ly)}" font-size="{_g(font)}" '
            f'font-family="sans-serif" text-anchor="middle">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
