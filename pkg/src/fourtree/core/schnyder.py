"""
Schnyder woods of suspended plane graphs.

A wood is stored per dart: ``out_color[d]`` is the colour of the direction
along ``d`` (0 when the edge carries no direction that way). An edge is
unidirected when exactly one of its darts is coloured and bidirected when
both are. Root r_i always owns an outgoing half-edge of colour i.
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from fourtree.core.plane_graph import (
    PlaneGraph,
    Suspension,
    SuspendedDual,
    suspended_dual,
)
from fourtree.domain.errors import InvalidWood
from fourtree.utils.constants import COLORS, next_color, prev_color
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Unidirected:
    """Edge directed toward ``toward`` with ``color``."""

    toward: int
    color: int


@dataclass(frozen=True)
class Bidirected:
    """Edge with one colour per direction; endpoints as in the graph's edge."""

    color_toward_u: int
    color_toward_v: int


EdgeLabel = Union[Unidirected, Bidirected]


@dataclass(frozen=True)
class Violation:
    """
    A broken wood condition.

    Attributes:
        condition: 0 for unlabelled edges, otherwise the wood condition 1-4
        where: Human-readable location ("vertex 3", "face 2", "edge 7")
        edges: Offending edge ids
        message: Description
    """

    condition: int
    where: str
    edges: Tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"condition {self.condition} at {self.where}: {self.message}"


@dataclass(frozen=True)
class SchnyderWood:
    """
    Orientation and colouring of a suspension.

    Attributes:
        suspension: The suspended graph
        out_color: Colour of the direction along each dart, 0 if none
        half_colors: Colours of the outgoing half-edges at r1, r2, r3
    """

    suspension: Suspension
    out_color: Tuple[int, ...]
    half_colors: Tuple[int, int, int] = (1, 2, 3)

    @property
    def graph(self) -> PlaneGraph:
        return self.suspension.base

    @property
    def roots(self) -> Tuple[int, int, int]:
        return self.suspension.roots

    def color(self, d: int) -> int:
        return self.out_color[d]

    def is_bidirected(self, e: int) -> bool:
        return self.out_color[2 * e] > 0 and self.out_color[2 * e + 1] > 0

    def label(self, e: int) -> EdgeLabel:
        u, v = self.graph.endpoints(e)
        forward, backward = self.out_color[2 * e], self.out_color[2 * e + 1]
        if forward and backward:
            return Bidirected(backward, forward)
        if forward:
            return Unidirected(v, forward)
        if backward:
            return Unidirected(u, backward)
        raise InvalidWood(f"Edge {e} ({u}-{v}) carries no direction")

    def outgoing(self, v: int) -> Dict[int, int]:
        """Colour to outgoing dart at ``v``; half-edges use their synthetic ids."""
        out = {}
        for d in self.graph.rotation(v):
            if self.out_color[d]:
                out[self.out_color[d]] = d
        i = self.suspension.root_index(v)
        if i:
            out[self.half_colors[i - 1]] = self.suspension.half_edges[i - 1]
        return out

    def out_dart(self, v: int, color: int) -> int:
        """The outgoing dart of ``color`` at ``v``."""
        for d in self.graph.rotation(v):
            if self.out_color[d] == color:
                return d
        raise InvalidWood(f"Vertex {v} has no outgoing edge of colour {color}")

    def bidirected_edges(self) -> List[int]:
        return [e for e in range(self.graph.n_edges) if self.is_bidirected(e)]

    def with_label(self, e: int, label: EdgeLabel) -> "SchnyderWood":
        """Copy of the wood with edge ``e`` relabelled."""
        colors = list(self.out_color)
        colors[2 * e], colors[2 * e + 1] = _dart_colors(self.graph, e, label)
        return replace(self, out_color=tuple(colors))

    @classmethod
    def from_labels(
        cls, suspension: Suspension, labels: Mapping[int, EdgeLabel]
    ) -> "SchnyderWood":
        """Build a wood from per-edge labels; every edge must be labelled."""
        g = suspension.base
        colors = [0] * g.n_darts
        for e in range(g.n_edges):
            if e not in labels:
                raise InvalidWood(f"Edge {e} {g.endpoints(e)} has no label")
            colors[2 * e], colors[2 * e + 1] = _dart_colors(g, e, labels[e])
        return cls(suspension, tuple(colors))


def _dart_colors(g: PlaneGraph, e: int, label: EdgeLabel) -> Tuple[int, int]:
    u, v = g.endpoints(e)
    if isinstance(label, Bidirected):
        if label.color_toward_u not in COLORS or label.color_toward_v not in COLORS:
            raise InvalidWood(f"Edge {e} has colours outside 1..3: {label}")
        return label.color_toward_v, label.color_toward_u
    if label.color not in COLORS:
        raise InvalidWood(f"Edge {e} has a colour outside 1..3: {label}")
    if label.toward == v:
        return label.color, 0
    if label.toward == u:
        return 0, label.color
    raise InvalidWood(f"Edge {e} ({u}-{v}) cannot point toward {label.toward}")


def _cw_before(p: int, q: int, r: int, size: int) -> bool:
    """True if p, q, r occur in this clockwise order."""
    return (q - p) % size < (r - p) % size


def check_wood(s: SchnyderWood) -> List[Violation]:
    """
    Check all four wood conditions.

    Returns:
        List[Violation]: Empty iff ``s`` is a Schnyder wood
    """
    g = s.graph
    susp = s.suspension
    violations: List[Violation] = []

    for e in range(g.n_edges):
        a, b = s.out_color[2 * e], s.out_color[2 * e + 1]
        if not a and not b:
            violations.append(Violation(0, f"edge {e}", (e,), "edge carries no direction"))
        elif a and b and a == b:
            violations.append(
                Violation(1, f"edge {e}", (e,), f"bidirected edge has colour {a} twice")
            )

    for i, c in enumerate(s.half_colors, start=1):
        if c != i:
            violations.append(
                Violation(
                    2, f"vertex {s.roots[i - 1]}", (), f"half-edge has colour {c}, expected {i}"
                )
            )

    for v in range(g.n_vertices):
        violations.extend(_check_vertex(s, v))

    for f in g.faces:
        if f.id == g.outer_face_id:
            continue
        for c in COLORS:
            if all(s.out_color[d] == c for d in f.boundary) or all(
                s.out_color[d ^ 1] == c for d in f.boundary
            ):
                violations.append(
                    Violation(
                        4,
                        f"face {f.id}",
                        tuple(d >> 1 for d in f.boundary),
                        f"boundary is a directed cycle of colour {c}",
                    )
                )
    return violations


def _check_vertex(s: SchnyderWood, v: int) -> List[Violation]:
    susp = s.suspension
    rot = susp.extended_rotation(v)
    pos = {d: i for i, d in enumerate(rot)}
    size = len(rot)
    half = set(susp.half_edges)
    where = f"vertex {v}"

    out: Dict[int, List[int]] = {c: [] for c in COLORS}
    for d in rot:
        c = s.half_colors[d - susp.half_edges[0]] if d in half else s.out_color[d]
        if c in out:
            out[c].append(d)
    bad = [c for c in COLORS if len(out[c]) != 1]
    if bad:
        edges = tuple(d >> 1 for c in bad for d in out[c] if d not in half)
        counts = ", ".join(f"{len(out[c])} of colour {c}" for c in bad)
        return [Violation(3, where, edges, f"outgoing edges: {counts}")]

    e1, e2, e3 = (pos[out[c][0]] for c in COLORS)
    if not _cw_before(e1, e2, e3, size):
        return [Violation(3, where, (), "outgoing colours are not clockwise 1, 2, 3")]

    found = []
    first = {c: pos[out[c][0]] for c in COLORS}
    for d in rot:
        if d in half:
            continue
        c = s.out_color[d ^ 1]
        if not c:
            continue
        start, stop = first[next_color(c)], first[prev_color(c)]
        p = pos[d]
        if (p - start) % size > (stop - start) % size:
            found.append(
                Violation(
                    3,
                    where,
                    (d >> 1,),
                    f"incoming colour {c} from {s.graph.head(d)} lies outside its sector",
                )
            )
    return found


def trees(s: SchnyderWood, i: int) -> List[Tuple[int, int]]:
    """
    Arcs of colour ``i`` as (tail, head) pairs.

    Raises:
        InvalidWood: The arcs are not a spanning tree oriented to r_i, or the
            union with the two other reversed trees has a directed cycle
    """
    g = s.graph
    arcs = _colored_arcs(s, i)
    tree = nx.DiGraph()
    tree.add_nodes_from(range(g.n_vertices))
    tree.add_edges_from(arcs)
    if len(arcs) != g.n_vertices - 1 or not nx.is_arborescence(tree.reverse(copy=False)):
        raise InvalidWood(f"Colour {i} arcs are not a spanning tree")
    root = s.roots[i - 1]
    if tree.out_degree(root) != 0:
        raise InvalidWood(f"Colour {i} tree is not oriented to root {root}")
    if not tree_union_is_acyclic(s, i):
        raise InvalidWood(f"Colour {i} tree with the reversed other trees has a cycle")
    return arcs


def _colored_arcs(s: SchnyderWood, i: int) -> List[Tuple[int, int]]:
    g = s.graph
    return [(g.tail(d), g.head(d)) for d in range(g.n_darts) if s.out_color[d] == i]


def tree_union_is_acyclic(s: SchnyderWood, i: int) -> bool:
    """
    No directed cycle in T_i plus the reversals of T_{i-1} and T_{i+1}.

    An edge coloured i - 1 one way and i + 1 the other appears in both
    directions after the reversals; such edges lie in T_{i-1}, so they form
    a forest and are contracted before the cycle test.
    """
    g = s.graph
    both_ways = nx.utils.UnionFind(range(g.n_vertices))
    arcs = []
    for d in range(g.n_darts):
        c, back = s.out_color[d], s.out_color[d ^ 1]
        if c == prev_color(i) and back == next_color(i):
            both_ways.union(g.tail(d), g.head(d))
        elif c == i:
            arcs.append((g.tail(d), g.head(d)))
        elif c in (prev_color(i), next_color(i)) and back not in (prev_color(i), next_color(i)):
            arcs.append((g.head(d), g.tail(d)))
    union = nx.DiGraph()
    union.add_nodes_from(both_ways[v] for v in range(g.n_vertices))
    for u, w in arcs:
        a, b = both_ways[u], both_ways[w]
        if a == b:
            return False
        union.add_edge(a, b)
    return nx.is_directed_acyclic_graph(union)


def dual_wood(
    s: SchnyderWood, sdual: Optional[SuspendedDual] = None, validate: bool = True
) -> SchnyderWood:
    """
    The dual wood on the suspended dual.

    For a dart ``d`` of colour c with an uncoloured twin, the dual edge gets
    colour c - 1 along ``d`` and c + 1 against it. For a bidirected pair
    where ``twin(d)`` carries colour c + 1, the dual edge is unidirected
    along ``d`` with colour c - 1. The triangle edge crossing the half-edge
    of r_i carries i + 1 from b_{i-1} and i - 1 from b_{i+1}.

    Applying it twice returns the wood on the primal edges with every dart
    reversed, see ``double_dual_colors``.

    Raises:
        InvalidWood: ``s`` is not a valid wood
    """
    if validate:
        violations = check_wood(s)
        if violations:
            raise InvalidWood("Cannot dualize an invalid wood", violations)
    sd = sdual or suspended_dual(s.suspension)
    g = s.graph
    colors = [0] * sd.graph.n_darts
    for e in range(g.n_edges):
        for d in (2 * e, 2 * e + 1):
            c, back = s.out_color[d], s.out_color[d ^ 1]
            if c and not back:
                colors[d] = prev_color(c)
                colors[d ^ 1] = next_color(c)
            elif c and back == next_color(c):
                colors[d] = prev_color(c)
    for i in (1, 2, 3):
        d = 2 * sd.triangle_edge(i)
        colors[d] = next_color(i)
        colors[d + 1] = prev_color(i)
    logger.debug(f"Dual wood over {sd.graph!r}")
    return SchnyderWood(sd.suspension, tuple(colors))


def double_dual_colors(dd: SchnyderWood, n_edges: int) -> Tuple[int, ...]:
    """
    Colours of a double dual wood read back on the first ``n_edges`` edges.

    Edge ids survive both dualizations while each dart is reversed, so dart
    ``d`` of the original carries the colour of dart ``d ^ 1`` of ``dd``.
    """
    return tuple(dd.out_color[d ^ 1] for d in range(2 * n_edges))


def format_wood(s: SchnyderWood) -> List[str]:
    """Text lines ``u v uni <toward> <color>`` / ``u v bi <cu> <cv>`` per edge."""
    lines = []
    g = s.graph
    for e in range(g.n_edges):
        u, v = g.endpoints(e)
        label = s.label(e)
        if isinstance(label, Bidirected):
            lines.append(f"{u} {v} bi {label.color_toward_u} {label.color_toward_v}")
        else:
            lines.append(f"{u} {v} uni {label.toward} {label.color}")
    return lines


def parse_wood(susp: Suspension, lines: Sequence[str]) -> SchnyderWood:
    """Parse the per-edge wood text format against a suspension."""
    g = susp.base
    labels: Dict[int, EdgeLabel] = {}
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            u, v, kind, a, b = parts[0], parts[1], parts[2], parts[3], parts[4]
            u, v, a, b = int(u), int(v), int(a), int(b)
        except (IndexError, ValueError):
            raise InvalidWood(f"line {no}: cannot parse '{raw.strip()}'") from None
        if not g.has_edge(u, v):
            raise InvalidWood(f"line {no}: {u}-{v} is not an edge")
        e = g.edge_between(u, v)
        tail, _ = g.endpoints(e)
        if kind == "bi":
            cu, cv = (a, b) if tail == u else (b, a)
            labels[e] = Bidirected(cu, cv)
        elif kind == "uni":
            labels[e] = Unidirected(a, b)
        else:
            raise InvalidWood(f"line {no}: unknown label kind '{kind}'")
    return SchnyderWood.from_labels(susp, labels)
