"""Schematic SVG pictures of boundaries and paths.

Mathematical orientation (y up, origin bottom-left), one lattice unit is
40px.  Output is a pure function of the inputs.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence
from xml.sax.saxutils import escape

from .core import Composition, LatticePath, as_composition, boundary_x, shift_composition

UNIT = 40
MARGIN = 20
BOUNDARY_COLOURS = ("#c0392b", "#e67e22", "#8e44ad", "#16a085", "#7f8c8d")
PATH_COLOURS = ("#1f4e9c", "#27ae60", "#2c3e50", "#d35400")


def boundary_points(a: Composition) -> List[tuple]:
    return [(boundary_x(a, y), y) for y in range(a.m + 1)]


def distinct_shifts(a: Composition) -> List[Composition]:
    out: List[Composition] = []
    for j in range(a.m):
        b = shift_composition(a, j)
        if b not in out:
            out.append(b)
    return out


def render_svg(a, all_shifts: bool = False, paths: Sequence[LatticePath] = ()) -> str:
    a = as_composition(a)
    boundaries = distinct_shifts(a) if all_shifts else [a]
    for p in paths:
        pts = p.points()
        if any(q.y < 0 or q.y > a.m for q in pts):
            raise ValueError(f"path {p} leaves the height range [0, {a.m}]")
    xs = [0, a.n] + [q.x for p in paths for q in p.points()]
    x_lo, x_hi = min(xs), max(xs)
    width = (x_hi - x_lo) * UNIT + 2 * MARGIN
    height = a.m * UNIT + 2 * MARGIN

    def sx(x: int) -> int:
        return MARGIN + (x - x_lo) * UNIT

    def sy(y: int) -> int:
        return MARGIN + (a.m - y) * UNIT

    def polyline(points: Iterable[tuple], colour: str, width_px: int, cls: str, dash: str = "") -> str:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in points)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'  <polyline class="{cls}" points="{coords}" fill="none" stroke="{colour}" '
            f'stroke-width="{width_px}"{extra}/>'
        )

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"  <title>{escape('boundary ' + str(a))}</title>",
        '  <g class="grid" stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(x_lo, x_hi + 1):
        lines.append(f'    <line x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(a.m)}"/>')
    for y in range(a.m + 1):
        lines.append(f'    <line x1="{sx(x_lo)}" y1="{sy(y)}" x2="{sx(x_hi)}" y2="{sy(y)}"/>')
    lines.append("  </g>")
    for idx, b in enumerate(boundaries):
        lines.append(polyline(boundary_points(b), BOUNDARY_COLOURS[idx % len(BOUNDARY_COLOURS)], 3, "boundary", "6,3"))
    for idx, p in enumerate(paths):
        pts = [q.as_tuple() for q in p.points()]
        lines.append(polyline(pts, PATH_COLOURS[idx % len(PATH_COLOURS)], 4, "path"))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
