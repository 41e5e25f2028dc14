"""
Self-contained SVG drawings.
"""

from typing import Dict, List, Optional

from fourtree.core.plane_graph import PlaneGraph
from fourtree.core.schnyder import SchnyderWood
from fourtree.domain.entities import TreePair
from fourtree.export.layout import Point, dual_edge_route, face_points, tutte_layout
from fourtree.utils.constants import COLOR_NAMES

SIZE = 600
MARGIN = 40


def _line(a: Point, b: Point, style: Dict[str, object]) -> str:
    attrs = " ".join(f'{k}="{v}"' for k, v in style.items())
    return f'<line x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" {attrs}/>'


def _polyline(points: List[Point], style: Dict[str, object]) -> str:
    attrs = " ".join(f'{k}="{v}"' for k, v in style.items())
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    return f'<polyline points="{coords}" fill="none" {attrs}/>'


def _arrow_end(a: Point, b: Point, shrink: float) -> Point:
    """Point on segment a-b stopping ``shrink`` short of ``b``."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    length = (dx * dx + dy * dy) ** 0.5 or 1.0
    return b[0] - dx * shrink / length, b[1] - dy * shrink / length


def render_svg(
    g: PlaneGraph,
    wood: Optional[SchnyderWood] = None,
    pair: Optional[TreePair] = None,
    positions: Optional[Dict[int, Point]] = None,
) -> str:
    """
    SVG drawing of ``g``.

    Uses ``positions`` when given and the Tutte layout otherwise. Tree
    edges are thick, wood arcs carry their colours and arrowheads, and the
    co-tree is overlaid as dashed gray routes through the edge midpoints.
    """
    pos = positions or tutte_layout(g)
    faces = face_points(g, pos)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (SIZE - 2 * MARGIN) / (span * 1.3)
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2

    def screen(p: Point) -> Point:
        # y grows downwards on screen
        return SIZE / 2 + (p[0] - cx) * scale, SIZE / 2 - (p[1] - cy) * scale

    tree = set(pair.tree) if pair else set()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}"'
        f' viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
    ]
    for name in COLOR_NAMES.values():
        out.append(
            f'<marker id="arrow-{name}" viewBox="0 0 10 10" refX="10" refY="5"'
            f' markerWidth="6" markerHeight="6" orient="auto">'
            f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{name}"/></marker>'
        )
    out.append("</defs>")
    out.append('<rect width="100%" height="100%" fill="white"/>')

    for e in range(g.n_edges):
        u, w = g.endpoints(e)
        a, b = screen(pos[u]), screen(pos[w])
        width = 4 if e in tree else 1.5
        if wood is None:
            out.append(_line(a, b, {"stroke": "black", "stroke-width": width}))
            continue
        colored = [(d, wood.color(d)) for d in (2 * e, 2 * e + 1) if wood.color(d)]
        if len(colored) == 2:
            # bidirected: each half in its own colour, arrow at the far end
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            halves = {2 * e: (a, mid, b), 2 * e + 1: (b, mid, a)}
            for d, c in colored:
                start, centre, end = halves[d]
                name = COLOR_NAMES[c]
                out.append(_line(start, centre, {"stroke": name, "stroke-width": width}))
                out.append(_line(centre, _arrow_end(centre, end, 8), {
                    "stroke": name, "stroke-width": width, "marker-end": f"url(#arrow-{name})"}))
        else:
            d, c = colored[0]
            start, end = (a, b) if d == 2 * e else (b, a)
            name = COLOR_NAMES[c]
            out.append(_line(start, _arrow_end(start, end, 8), {
                "stroke": name, "stroke-width": width, "marker-end": f"url(#arrow-{name})"}))

    if pair:
        for e in pair.co_tree:
            route = [screen(p) for p in dual_edge_route(g, pos, faces, e)]
            out.append(_polyline(route, {
                "stroke": "gray", "stroke-width": 1.5, "stroke-dasharray": "5,4"}))
        for p in faces.values():
            x, y = screen(p)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="gray"/>')

    for v in range(g.n_vertices):
        x, y = screen(pos[v])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="9" fill="white" stroke="black"/>')
        out.append(
            f'<text x="{x:.2f}" y="{y + 4:.2f}" font-family="sans-serif" font-size="10"'
            f' text-anchor="middle">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
