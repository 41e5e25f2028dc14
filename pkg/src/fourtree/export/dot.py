"""
Graphviz DOT rendering of a graph, its wood and a tree pair.
"""

from typing import Dict, List, Optional

from fourtree.core.plane_graph import PlaneGraph
from fourtree.core.schnyder import SchnyderWood
from fourtree.domain.entities import TreePair
from fourtree.export.layout import Point
from fourtree.utils.constants import COLOR_NAMES


def _attrs(**values) -> str:
    body = ", ".join(f'{k}="{v}"' for k, v in values.items() if v is not None)
    return f" [{body}]" if body else ""


def _pos(p: Point, scale: float) -> str:
    return f"{p[0] * scale:.3f},{p[1] * scale:.3f}!"


def render_dot(
    g: PlaneGraph,
    wood: Optional[SchnyderWood] = None,
    pair: Optional[TreePair] = None,
    positions: Optional[Dict[int, Point]] = None,
    name: str = "G",
    scale: float = 4.0,
) -> str:
    """
    DOT digraph for ``g``.

    Wood arcs are drawn in their colours, bidirected edges as two arcs.
    Tree edges are bold. Co-tree edges are dashed lines between face
    nodes ``f<id>``, the outer face being ``f_outer``.
    """
    tree = set(pair.tree) if pair else set()
    lines: List[str] = [f'digraph "{name}" {{', "  node [shape=circle, fontsize=10];"]
    for v in range(g.n_vertices):
        pos = _pos(positions[v], scale) if positions else None
        lines.append(f"  {v}{_attrs(pos=pos)};")

    for e in range(g.n_edges):
        u, w = g.endpoints(e)
        style = "bold" if e in tree else None
        if wood is None:
            lines.append(f"  {u} -> {w}{_attrs(dir='none', style=style)};")
            continue
        for d, (a, b) in ((2 * e, (u, w)), (2 * e + 1, (w, u))):
            c = wood.color(d)
            if c:
                lines.append(f"  {a} -> {b}{_attrs(color=COLOR_NAMES[c], style=style)};")

    if pair:
        lines.append("  subgraph dual {")
        lines.append("    node [shape=point, color=gray40];")
        outer = g.outer_face_id
        for f in g.faces:
            label = "f_outer" if f.id == outer else f"f{f.id}"
            lines.append(f"    {label};")
        for e in pair.co_tree:
            a, b = (
                "f_outer" if f == outer else f"f{f}"
                for f in (g.left_face(2 * e), g.right_face(2 * e))
            )
            dashed = _attrs(dir="none", style="dashed", color="gray40")
            lines.append(f"    {a} -> {b}{dashed};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
