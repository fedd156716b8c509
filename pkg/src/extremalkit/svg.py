"""Standalone SVG rendering of drawings.  Rendering only: floats appear here and
nowhere in the computations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import Drawing, crossing_point_key


@dataclass
class SvgOptions:
    width: int = 640
    height: int = 480
    margin: int = 30
    vertex_radius: float = 4.0
    labels: bool = True
    mark_crossings: bool = False
    title: str | None = None


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


def crossing_points(d: Drawing) -> list[tuple[Fraction, Fraction]]:
    P = d.int_positions
    out = []
    for e, f in sorted(d.crossing_pairs):
        xn, yn, den = crossing_point_key(P[e[0]], P[e[1]], P[f[0]], P[f[1]])
        out.append((Fraction(xn, den * d.scale), Fraction(yn, den * d.scale)))
    return out


def export_svg(d: Drawing, options: SvgOptions | None = None) -> bytes:
    """Vertices as labelled circles, edges as segments, optional crossing marks.

    The picture is fitted to the canvas with independent x and y scales, so
    only the combinatorial picture (orders along lines, which edges cross) is
    faithful.  Coordinates are printed with six decimals.
    """
    o = options or SvgOptions()
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{o.width}" height="{o.height}" '
        f'viewBox="0 0 {o.width} {o.height}">',
    ]
    if o.title:
        lines.append(f"  <title>{escape(o.title)}</title>")
    if d.graph.n:
        xs = [p.x for p in d.positions]
        ys = [p.y for p in d.positions]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        sx = (o.width - 2 * o.margin) / float(x1 - x0) if x1 != x0 else 0.0
        sy = (o.height - 2 * o.margin) / float(y1 - y0) if y1 != y0 else 0.0

        def to_px(x, y):
            px = o.margin + float(x - x0) * sx if sx else o.width / 2
            py = o.height - o.margin - float(y - y0) * sy if sy else o.height / 2
            return _fmt(px), _fmt(py)

        lines.append('  <g stroke="black" stroke-width="1.2">')
        for u, v in d.edges:
            (ax, ay), (bx, by) = to_px(*d.positions[u]), to_px(*d.positions[v])
            lines.append(f'    <line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" data-edge="{u}-{v}"/>')
        lines.append("  </g>")
        if o.mark_crossings:
            lines.append('  <g fill="none" stroke="red" stroke-width="1" class="crossings">')
            for x, y in crossing_points(d):
                cx, cy = to_px(x, y)
                lines.append(f'    <circle cx="{cx}" cy="{cy}" r="{_fmt(o.vertex_radius * 0.8)}" class="crossing"/>')
            lines.append("  </g>")
        lines.append('  <g fill="white" stroke="black">')
        for v, p in enumerate(d.positions):
            cx, cy = to_px(*p)
            lines.append(f'    <circle cx="{cx}" cy="{cy}" r="{_fmt(o.vertex_radius)}" class="vertex"/>')
            if o.labels:
                lines.append(
                    f'    <text x="{cx}" y="{_fmt(float(cy) - o.vertex_radius - 2)}" font-size="10" '
                    f'text-anchor="middle" stroke="none" fill="black">{v}</text>'
                )
        lines.append("  </g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode()
