"""Planar picture of the score vectors for three-candidate profiles.

Draws every score vector, their convex hull and the part of the hull
boundary that no other hull point dominates (the Pareto boundary).  All
geometry uses exact integer orientation tests.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .profile import Profile
from .scorevec import score_set

__all__ = ["PlotError", "orientation", "convex_hull", "pareto_chain", "weak_pareto_chain", "on_chain", "hull_document", "render_svg"]

Point = tuple[int, int]


class PlotError(ValueError):
    pass


def orientation(o: Point, a: Point, b: Point) -> int:
    """Sign of the cross product (a - o) x (b - o): 1 left turn, -1 right turn, 0 collinear."""
    v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (v > 0) - (v < 0)


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Counter-clockwise hull vertices without collinear points (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _walk_clockwise(hull: list[Point], start: Point, end: Point) -> list[Point]:
    i = hull.index(start)
    chain = [start]
    while hull[i] != end:
        i = (i - 1) % len(hull)
        chain.append(hull[i])
    return chain


def pareto_chain(hull: list[Point]) -> list[Point]:
    """Hull vertices from the highest (then rightmost) to the rightmost (then highest)."""
    top = max(hull, key=lambda q: (q[1], q[0]))
    right = max(hull, key=lambda q: (q[0], q[1]))
    return _walk_clockwise(hull, top, right)


def weak_pareto_chain(hull: list[Point]) -> list[Point]:
    """Like :func:`pareto_chain` but extended along a flat top edge and a vertical right edge."""
    top = max(hull, key=lambda q: (q[1], -q[0]))
    right = max(hull, key=lambda q: (q[0], -q[1]))
    return _walk_clockwise(hull, top, right)


def on_chain(q: Point, chain: list[Point]) -> bool:
    if len(chain) == 1:
        return q == chain[0]
    for a, b in zip(chain, chain[1:]):
        if (
            orientation(a, b, q) == 0
            and min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])
        ):
            return True
    return False


def hull_document(pr: Profile) -> dict:
    """Geometry of the score vectors as a JSON-ready dict."""
    if pr.p != 3:
        raise PlotError(f"plot supports p=3 only (profile has p={pr.p})")
    r = score_set(pr)
    pts = {pr.candidates[a].label: tuple(v) for a, v in r.items()}
    hull = convex_hull(list(pts.values()))
    chain = pareto_chain(hull)
    weak = weak_pareto_chain(hull)
    return {
        "points": {lab: list(v) for lab, v in pts.items()},
        "hull": [list(q) for q in hull],
        "pareto_chain": [list(q) for q in chain],
        "pareto_edges": [[list(a), list(b)] for a, b in zip(chain, chain[1:])],
        "boundary": sorted(lab for lab, v in pts.items() if on_chain(v, chain)),
        "weak_boundary": sorted(lab for lab, v in pts.items() if on_chain(v, weak)),
    }


def render_svg(doc: dict, size: int = 400, margin: int = 40) -> str:
    pts = [tuple(v) for v in doc["points"].values()]
    xmax = max(1, max(x for x, _ in pts))
    ymax = max(1, max(y for _, y in pts))
    span = max(xmax, ymax)
    scale = (size - 2 * margin) / span

    def sx(x):
        return round(margin + x * scale, 2)

    def sy(y):
        return round(size - margin - y * scale, 2)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g class="axes" stroke="black" stroke-width="1">',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(span)}" y2="{sy(0)}"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(span)}"/>',
        "</g>",
        f'<text x="{sx(span)}" y="{sy(0) + 16}" font-size="12">r1</text>',
        f'<text x="{sx(0) - 20}" y="{sy(span)}" font-size="12">r2</text>',
    ]
    hull = doc["hull"]
    if len(hull) >= 3:
        poly = " ".join(f"{sx(x)},{sy(y)}" for x, y in hull)
        out.append(f'<polygon class="hull" points="{poly}" fill="#dde8f5" stroke="#4a6fa5" stroke-width="1"/>')
    elif len(hull) == 2:
        (x1, y1), (x2, y2) = hull
        out.append(
            f'<line class="hull" x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}" stroke="#4a6fa5" stroke-width="1"/>'
        )
    for (x1, y1), (x2, y2) in doc["pareto_edges"]:
        out.append(
            f'<line class="pareto" data-from="{x1},{y1}" data-to="{x2},{y2}" '
            f'x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}" stroke="#c0392b" stroke-width="3"/>'
        )
    if len(doc["pareto_chain"]) == 1:
        x, y = doc["pareto_chain"][0]
        out.append(f'<circle class="pareto" data-at="{x},{y}" cx="{sx(x)}" cy="{sy(y)}" r="7" fill="none" stroke="#c0392b" stroke-width="3"/>')
    for lab, (x, y) in sorted(doc["points"].items()):
        cls = "point boundary" if lab in doc["boundary"] else "point"
        attr = escape(lab, {'"': "&quot;"})
        out.append(f'<circle class="{cls}" data-label="{attr}" data-at="{x},{y}" cx="{sx(x)}" cy="{sy(y)}" r="3.5" fill="black"/>')
        out.append(f'<text x="{sx(x) + 6}" y="{sy(y) - 6}" font-size="12">{escape(lab)} ({x}, {y})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
