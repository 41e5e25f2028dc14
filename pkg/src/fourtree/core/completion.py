"""
The completion of a suspension and the lattice-minimal Schnyder wood.

The completion superimposes a suspension and its suspended dual. Every
primal/dual edge pair meets in a crossing vertex ``z_e``; the half-edge of
r_i meets the triangle edge opposite b_i in ``h_i``; all dual half-edges
and the ``h_i`` end in a vertex at infinity. A Schnyder wood is the same
thing as an orientation of the completion with out-degree 3 at primal and
dual vertices, 1 at crossings and at the ``h_i``, and 0 at infinity.

Woods are ordered by reversing clockwise directed cycles; the minimal wood
is the one whose completion has none.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from fourtree.core.plane_graph import (
    PlaneGraph,
    Suspension,
    SuspendedDual,
    build_plane_graph,
    face_walk,
    suspended_dual,
)
from fourtree.core.schnyder import SchnyderWood, Violation, check_wood, dual_wood
from fourtree.domain.errors import FlipDidNotConverge, InvalidWood
from fourtree.utils.constants import COLORS, next_color, prev_color
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)

PRIMAL = "primal"
DUAL = "dual"
CROSSING = "crossing"
HALF = "half"
INFINITY = "infinity"


@dataclass(frozen=True)
class CompletionFrame:
    """
    The completion graph of a suspension, independent of any wood.

    Vertex ids: primal ``[0, n)``, then suspended-dual vertices shifted by
    ``n``, one crossing per primal edge, ``h_1..h_3`` and infinity last.

    Attributes:
        suspension: The primal suspension
        sdual: Its suspended dual
        graph: The completion as a simple plane graph
        primal_segment: Primal dart to the completion dart tail -> z_e
        dual_segment: Dual dart (non-triangle) to the completion dart tail -> z_e
        fixed: Completion darts whose direction and colour never change
        alpha: Prescribed out-degree per completion vertex
    """

    suspension: Suspension
    sdual: SuspendedDual
    graph: PlaneGraph
    primal_segment: Tuple[int, ...]
    dual_segment: Tuple[int, ...]
    fixed: Dict[int, int]
    alpha: Tuple[int, ...]

    @property
    def n_primal(self) -> int:
        return self.suspension.base.n_vertices

    @property
    def crossing_offset(self) -> int:
        return self.n_primal + self.sdual.graph.n_vertices

    @property
    def h(self) -> Tuple[int, int, int]:
        base = self.crossing_offset + self.suspension.base.n_edges
        return (base, base + 1, base + 2)

    @property
    def infinity(self) -> int:
        return self.graph.n_vertices - 1

    def crossing(self, e: int) -> int:
        return self.crossing_offset + e

    def dual_vertex(self, x: int) -> int:
        return self.n_primal + x

    def kind(self, v: int) -> str:
        if v < self.n_primal:
            return PRIMAL
        if v < self.crossing_offset:
            return DUAL
        if v < self.h[0]:
            return CROSSING
        if v < self.infinity:
            return HALF
        return INFINITY

    def origin(self, z: int) -> Tuple[int, int]:
        """Primal and dual edge ids meeting in crossing ``z`` (they coincide)."""
        e = z - self.crossing_offset
        return e, e

    def describe(self, v: int) -> str:
        kind = self.kind(v)
        if kind == PRIMAL:
            return f"v{v}"
        if kind == DUAL:
            x = v - self.n_primal
            if x in self.sdual.b:
                return f"b{self.sdual.b.index(x) + 1}"
            return f"f{x}"
        if kind == CROSSING:
            return f"z{v - self.crossing_offset}"
        if kind == HALF:
            return f"h{v - self.h[0] + 1}"
        return "inf"

    @property
    def infinity_faces(self) -> Set[int]:
        g = self.graph
        return {g.left_face(d) for d in g.rotation(self.infinity)} | {
            g.right_face(d) for d in g.rotation(self.infinity)
        }


@dataclass(frozen=True)
class Completion:
    """
    An oriented, coloured completion.

    Attributes:
        frame: The completion graph and its index maps
        arcs: Per completion edge, the dart giving its direction
        colors: Per completion edge, its colour
    """

    frame: CompletionFrame
    arcs: Tuple[int, ...]
    colors: Tuple[int, ...] = field(default=())

    @property
    def graph(self) -> PlaneGraph:
        return self.frame.graph

    def arc_dart(self, e: int) -> int:
        return self.arcs[e]

    def arc_color(self, e: int) -> int:
        return self.colors[e]

    def origin(self, z: int) -> Tuple[int, int]:
        return self.frame.origin(z)

    def is_arc(self, d: int) -> bool:
        return self.arcs[d >> 1] == d

    def out_degree(self, v: int) -> int:
        return sum(1 for d in self.graph.rotation(v) if self.arcs[d >> 1] == d)


def completion_frame(
    susp: Suspension, sdual: Optional[SuspendedDual] = None
) -> CompletionFrame:
    """Build the completion graph of a suspension."""
    g = susp.base
    sd = sdual or suspended_dual(susp)
    dg = sd.graph
    n = g.n_vertices
    n_edges = g.n_edges
    cross0 = n + dg.n_vertices
    h = tuple(cross0 + n_edges + i for i in range(3))
    inf = cross0 + n_edges + 3
    b = tuple(n + x for x in sd.b)

    def primal_target(d: int) -> int:
        if d < g.n_darts:
            return cross0 + (d >> 1)
        return h[d - g.n_darts]

    def dual_target(d: int) -> int:
        if d < g.n_darts:
            return cross0 + (d >> 1)
        if d < dg.n_darts:
            return h[(d >> 1) - n_edges]
        return inf

    lists: List[List[int]] = []
    for v in range(n):
        lists.append([primal_target(d) for d in susp.extended_rotation(v)])
    for x in range(dg.n_vertices):
        lists.append([dual_target(d) for d in sd.suspension.extended_rotation(x)])
    for e in range(n_edges):
        d = 2 * e
        left = n + sd.vertex_of_face(g.left_face(d), e)
        right = n + sd.vertex_of_face(g.right_face(d), e)
        lists.append([g.tail(d), left, g.head(d), right])
    for i in COLORS:
        r = susp.roots[i - 1]
        lists.append([r, b[next_color(i) - 1], inf, b[prev_color(i) - 1]])
    lists.append([h[0], b[1], h[2], b[0], h[1], b[2]])

    graph = build_plane_graph(lists, outer=face_walk(lists, inf, h[0]))

    primal_segment = tuple(graph.dart(g.tail(d), cross0 + (d >> 1)) for d in range(g.n_darts))
    dual_segment = tuple(
        graph.dart(n + dg.tail(d), cross0 + (d >> 1)) for d in range(g.n_darts)
    )

    fixed: Dict[int, int] = {}
    for i in COLORS:
        hi = h[i - 1]
        fixed[graph.dart(susp.roots[i - 1], hi)] = i
        fixed[graph.dart(b[prev_color(i) - 1], hi)] = next_color(i)
        fixed[graph.dart(b[next_color(i) - 1], hi)] = prev_color(i)
        fixed[graph.dart(hi, inf)] = i
        fixed[graph.dart(b[i - 1], inf)] = i

    alpha = [3] * (n + dg.n_vertices) + [1] * (n_edges + 3) + [0]
    logger.debug(f"Completion frame {graph!r}")
    return CompletionFrame(
        susp, sd, graph, primal_segment, dual_segment, fixed, tuple(alpha)
    )


def wood_to_arcs(
    frame: CompletionFrame, primal: SchnyderWood, dual: SchnyderWood
) -> Tuple[List[int], List[int]]:
    """Per completion edge, the arc dart and its colour."""
    g = frame.graph
    arcs = [-1] * g.n_edges
    colors = [0] * g.n_edges
    for wood, segments in ((primal, frame.primal_segment), (dual, frame.dual_segment)):
        for d, seg in enumerate(segments):
            c = wood.out_color[d]
            if c:
                arcs[seg >> 1], colors[seg >> 1] = seg, c
            else:
                arcs[seg >> 1], colors[seg >> 1] = seg ^ 1, wood.out_color[d ^ 1]
    for seg, c in frame.fixed.items():
        arcs[seg >> 1], colors[seg >> 1] = seg, c
    return arcs, colors


def completion(s: SchnyderWood, frame: Optional[CompletionFrame] = None) -> Completion:
    """
    The completion oriented and coloured by ``s`` and its dual wood.

    Raises:
        InvalidWood: ``s`` is invalid, or a crossing vertex breaks the
            one-out three-in pattern
    """
    violations = check_wood(s)
    if violations:
        raise InvalidWood("Cannot complete an invalid wood", violations)
    frame = frame or completion_frame(s.suspension)
    dual = dual_wood(s, frame.sdual, validate=False)
    arcs, colors = wood_to_arcs(frame, s, dual)
    c = Completion(frame, tuple(arcs), tuple(colors))
    bad = check_crossing_vertices(c)
    if bad:
        raise InvalidWood("Completion has malformed crossing vertices", bad)
    return c


def check_crossing_vertices(c: Completion) -> List[Violation]:
    """Each crossing has one out-arc of colour k and in-arcs k-1, k, k+1 counterclockwise."""
    frame = c.frame
    g = c.graph
    found = []
    for e in range(frame.suspension.base.n_edges):
        z = frame.crossing(e)
        rot = g.rotation(z)
        outs = [p for p, d in enumerate(rot) if c.is_arc(d)]
        where = f"crossing {frame.describe(z)}"
        if len(outs) != 1:
            found.append(Violation(3, where, (e,), f"{len(outs)} outgoing arcs"))
            continue
        k = outs[0]
        col = c.colors[rot[k] >> 1]
        expected = (prev_color(col), col, next_color(col))
        for step, want in enumerate(expected, start=1):
            got = c.colors[rot[(k - step) % 4] >> 1]
            if got != want:
                found.append(
                    Violation(3, where, (e,), f"incoming colour {got}, expected {want}")
                )
    return found


# Colour propagation


def propagate_colors(frame: CompletionFrame, arcs: Sequence[int]) -> List[int]:
    """
    Recover edge colours from an orientation of the completion.

    Starts from the fixed arcs and spreads the local colouring rules: around
    primal and dual vertices the out-arcs are coloured cyclically clockwise
    and an in-arc following the out-arc of colour c gets c - 1; around a
    crossing the in-arcs read k - 1, k, k + 1 counterclockwise from its
    out-arc of colour k.

    Raises:
        InvalidWood: The orientation is not an orientation of a Schnyder wood
    """
    g = frame.graph
    colors = [0] * g.n_edges
    for seg, c in frame.fixed.items():
        colors[seg >> 1] = c

    done: Set[int] = set()
    queue: Deque[int] = deque(
        v for v in range(frame.crossing_offset) if frame.alpha[v] and _touches_fixed(frame, v)
    )

    def assign(e: int, c: int, v: int) -> None:
        if colors[e] == 0:
            colors[e] = c
            u, w = g.endpoints(e)
            queue.append(w if u == v else u)
        elif colors[e] != c:
            raise InvalidWood(
                f"Conflicting colours {colors[e]} and {c} at {frame.describe(v)}"
            )

    while queue:
        v = queue.popleft()
        if v in done:
            continue
        kind = frame.kind(v)
        if kind in (HALF, INFINITY):
            continue
        done.add(v)
        rot = g.rotation(v)
        outs = [p for p, d in enumerate(rot) if arcs[d >> 1] == d]
        if len(outs) != frame.alpha[v]:
            raise InvalidWood(
                f"{frame.describe(v)} has out-degree {len(outs)}, expected {frame.alpha[v]}"
            )
        if kind == CROSSING:
            _color_crossing(rot, outs[0], colors, assign, v, frame)
        else:
            _color_vertex(rot, outs, colors, assign, v, frame)

    missing = [e for e in range(g.n_edges) if not colors[e]]
    if missing:
        raise InvalidWood(f"{len(missing)} completion edges were never coloured")
    return colors


def _touches_fixed(frame: CompletionFrame, v: int) -> bool:
    return any(d in frame.fixed or (d ^ 1) in frame.fixed for d in frame.graph.rotation(v))


def _color_vertex(rot, outs, colors, assign, v, frame) -> None:
    size = len(rot)
    start = None
    for j, p in enumerate(outs):
        c = colors[rot[p] >> 1]
        if c:
            start = (j, c)
            break
    if start is None:
        for p, d in enumerate(rot):
            x = colors[d >> 1]
            if x:
                # the out-arc preceding p clockwise carries x + 1
                j = max(
                    (q for q in range(len(outs)) if outs[q] < p), default=len(outs) - 1
                )
                start = (j, next_color(x))
                break
    if start is None:
        raise InvalidWood(f"No coloured edge at {frame.describe(v)}")
    j0, c0 = start
    out_color = {}
    for step in range(3):
        out_color[outs[(j0 + step) % 3]] = (c0 + step - 1) % 3 + 1
    current = None
    for off in range(size):
        p = (outs[0] + off) % size
        e = rot[p] >> 1
        if p in out_color:
            current = out_color[p]
            assign(e, current, v)
        else:
            assign(e, prev_color(current), v)


def _color_crossing(rot, k, colors, assign, v, frame) -> None:
    c = colors[rot[k] >> 1]
    if not c:
        for p in range(4):
            x = colors[rot[p] >> 1]
            if x:
                m = (k - p) % 4
                c = (x + 2 - m - 1) % 3 + 1
                break
    if not c:
        raise InvalidWood(f"No coloured edge at {frame.describe(v)}")
    assign(rot[k] >> 1, c, v)
    for step, want in enumerate((prev_color(c), c, next_color(c)), start=1):
        assign(rot[(k - step) % 4] >> 1, want, v)


def woods_from_orientation(
    frame: CompletionFrame, arcs: Sequence[int], colors: Optional[Sequence[int]] = None
) -> Tuple[SchnyderWood, SchnyderWood]:
    """Read the primal and dual woods back off an oriented completion."""
    if colors is None:
        colors = propagate_colors(frame, arcs)
    g = frame.suspension.base
    sd = frame.sdual

    def read(segments: Sequence[int], size: int) -> List[int]:
        out = [0] * size
        for d, seg in enumerate(segments):
            if arcs[seg >> 1] == seg:
                out[d] = colors[seg >> 1]
        return out

    primal = read(frame.primal_segment, g.n_darts)
    dual = read(frame.dual_segment, sd.graph.n_darts)
    for i in COLORS:
        t = 2 * sd.triangle_edge(i)
        dual[t], dual[t + 1] = next_color(i), prev_color(i)
    return (
        SchnyderWood(frame.suspension, tuple(primal)),
        SchnyderWood(sd.suspension, tuple(dual)),
    )


def compute_wood(susp: Suspension, frame: Optional[CompletionFrame] = None) -> SchnyderWood:
    """
    Some Schnyder wood of ``susp``.

    Orients the completion by a maximum flow that sends three units into
    every crossing and lets each primal or dual vertex absorb as many units
    as it still needs out-arcs; colours then follow by propagation.

    Raises:
        InvalidWood: No orientation with the prescribed out-degrees exists
    """
    frame = frame or completion_frame(susp)
    g = frame.graph
    n_edges = susp.base.n_edges
    source, sink = -1, -2

    fixed_out: Dict[int, int] = {}
    for seg in frame.fixed:
        t = g.tail(seg)
        fixed_out[t] = fixed_out.get(t, 0) + 1

    network = nx.DiGraph()
    for e in range(n_edges):
        z = frame.crossing(e)
        network.add_edge(source, z, capacity=3)
        for y in g.neighbors(z):
            network.add_edge(z, y, capacity=1)
    for y in range(frame.crossing_offset):
        network.add_edge(y, sink, capacity=frame.alpha[y] - fixed_out.get(y, 0))

    value, flow = nx.maximum_flow(network, source, sink)
    if value != 3 * n_edges:
        raise InvalidWood(
            f"No Schnyder orientation: flow {value} short of {3 * n_edges}"
        )

    arcs = [-1] * g.n_edges
    for seg in frame.fixed:
        arcs[seg >> 1] = seg
    for e in range(n_edges):
        z = frame.crossing(e)
        for d in g.rotation(z):
            y = g.head(d)
            arcs[d >> 1] = (d ^ 1) if flow[z].get(y, 0) else d

    primal, _ = woods_from_orientation(frame, arcs)
    violations = check_wood(primal)
    if violations:
        raise InvalidWood("Flow orientation does not yield a wood", violations)
    logger.info(f"Computed a Schnyder wood for {susp.base!r}")
    return primal


# Clockwise cycles


def find_clockwise_cycle(c: Completion) -> Optional[List[int]]:
    """
    A clockwise directed cycle of the completion, as arc darts in order, or None.

    Tries clockwise face boundaries first. Otherwise computes, for every
    face, the least number of arcs crossed from left to right on a way in
    from infinity; the faces with positive value are enclosed by clockwise
    cycles made of arcs separating value 0 on the left from value 1 on the
    right.
    """
    return _clockwise_cycle(c.frame, c.arcs)


def _clockwise_cycle(frame: CompletionFrame, arcs: Sequence[int]) -> Optional[List[int]]:
    g = frame.graph
    outside = frame.infinity_faces
    for f in g.faces:
        if f.id in outside:
            continue
        if all(arcs[d >> 1] == d ^ 1 for d in f.boundary):
            return [d ^ 1 for d in reversed(f.boundary)]

    dist = _face_potentials(frame, arcs)
    if max(dist) <= 0:
        return None

    boundary: Dict[int, List[int]] = {}
    for a in arcs:
        if dist[g.left_face(a)] == 0 and dist[g.right_face(a)] > 0:
            boundary.setdefault(g.tail(a), []).append(a)
    for cycle in _simple_cycles(g, boundary):
        if _encloses_right(g, cycle, outside):
            return cycle
    raise InvalidWood("Positive face potentials without a clockwise boundary cycle")


def _face_potentials(frame: CompletionFrame, arcs: Sequence[int]) -> List[int]:
    """
    Least number of arcs crossed from left to right on a way in from infinity, per face.

    This is how often each face is flipped on the way down to the minimal
    orientation.
    """
    g = frame.graph
    dist = [-1] * g.n_faces
    queue: Deque[Tuple[int, int]] = deque((0, f) for f in sorted(frame.infinity_faces))
    while queue:
        k, f = queue.popleft()
        if dist[f] != -1:
            continue
        dist[f] = k
        for d in g.face(f).boundary:
            other = g.right_face(d)
            if dist[other] != -1:
                continue
            # crossing the edge of d from its left to its right
            if arcs[d >> 1] == d:
                queue.append((k + 1, other))
            else:
                queue.appendleft((k, other))
    return dist


def _push_to_minimal(frame: CompletionFrame, arcs: List[int]) -> int:
    """
    Apply all face flips down to the minimal orientation at once.

    An arc ends up reversed iff the potential right of it exceeds the one on
    its left. Returns the number of face flips this stands for.
    """
    g = frame.graph
    dist = _face_potentials(frame, arcs)
    for e, a in enumerate(arcs):
        if dist[g.right_face(a)] > dist[g.left_face(a)]:
            arcs[e] = a ^ 1
    return sum(dist)


def _simple_cycles(g: PlaneGraph, out: Dict[int, List[int]]):
    """Split an Eulerian arc set into simple directed cycles."""
    for v0 in sorted(out):
        while out[v0]:
            verts = [v0]
            darts: List[int] = []
            index = {v0: 0}
            v = v0
            while True:
                if not out.get(v):
                    raise InvalidWood(f"Boundary arcs are unbalanced at vertex {v}")
                d = out[v].pop()
                w = g.head(d)
                darts.append(d)
                if w in index:
                    k = index[w]
                    yield darts[k:]
                    for x in verts[k + 1 :]:
                        del index[x]
                    del verts[k + 1 :]
                    del darts[k:]
                    v = w
                    if not darts and not out[v]:
                        break
                else:
                    index[w] = len(verts)
                    verts.append(w)
                    v = w


def _encloses_right(g: PlaneGraph, cycle: Sequence[int], outside: Set[int]) -> bool:
    """True if the faces right of ``cycle`` cannot reach infinity without crossing it."""
    cut = {d >> 1 for d in cycle}
    seen = {g.right_face(d) for d in cycle}
    stack = list(seen)
    while stack:
        f = stack.pop()
        if f in outside:
            return False
        for d in g.face(f).boundary:
            if d >> 1 in cut:
                continue
            nxt = g.right_face(d)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return True


def is_minimal(s: SchnyderWood, frame: Optional[CompletionFrame] = None) -> bool:
    """True iff the completion of ``s`` has no clockwise directed cycle."""
    return find_clockwise_cycle(completion(s, frame)) is None


# Minimization


@dataclass
class FlipStats:
    """
    Counters of a minimization run.

    Attributes:
        face_flips: Reversed clockwise face boundaries
        cycle_flips: Reversed general clockwise cycles
        cap: Flip limit
    """

    face_flips: int = 0
    cycle_flips: int = 0
    cap: int = 0

    @property
    def flips(self) -> int:
        return self.face_flips + self.cycle_flips


def minimize_with_stats(
    s: SchnyderWood,
    flip_cap_factor: int = 4,
    validate_every_flip: bool = True,
    frame: Optional[CompletionFrame] = None,
) -> Tuple[SchnyderWood, FlipStats]:
    """
    Reverse clockwise cycles of the completion until none is left.

    Args:
        s: A valid wood
        flip_cap_factor: Flips allowed per ``E * V`` of the primal graph
        validate_every_flip: Recolour and re-check the wood after each flip;
            when off, all face flips are applied at once from the face potentials
        frame: Reusable completion frame

    Returns:
        Tuple[SchnyderWood, FlipStats]: The minimal wood and flip counters

    Raises:
        InvalidWood: ``s`` or an intermediate wood is invalid
        FlipDidNotConverge: The flip limit was exceeded
    """
    c = completion(s, frame)
    frame = c.frame
    g = frame.graph
    base = s.graph
    arcs = list(c.arcs)
    outside = frame.infinity_faces
    stats = FlipStats(cap=flip_cap_factor * base.n_edges * base.n_vertices)
    if not validate_every_flip:
        stats.face_flips = _push_to_minimal(frame, arcs)
        if stats.flips > stats.cap:
            raise FlipDidNotConverge(stats.flips, stats.cap)

    reversed_count = [0] * g.n_faces
    for f in g.faces:
        reversed_count[f.id] = sum(1 for d in f.boundary if arcs[d >> 1] == d ^ 1)
    worklist = [
        f.id
        for f in g.faces
        if f.id not in outside and reversed_count[f.id] == len(f)
    ]

    def flip(cycle: Sequence[int]) -> None:
        for a in cycle:
            arcs[a >> 1] = a ^ 1
            left, right = g.left_face(a), g.right_face(a)
            reversed_count[left] += 1
            reversed_count[right] -= 1
            if left not in outside and reversed_count[left] == len(g.face(left)):
                worklist.append(left)

    while True:
        cycle = None
        while worklist:
            f = worklist.pop()
            face = g.face(f)
            if reversed_count[f] == len(face):
                cycle = [d ^ 1 for d in reversed(face.boundary)]
                stats.face_flips += 1
                break
        if cycle is None:
            cycle = _clockwise_cycle(frame, arcs)
            if cycle is None:
                break
            stats.cycle_flips += 1
        if stats.flips > stats.cap:
            raise FlipDidNotConverge(stats.flips, stats.cap)
        flip(cycle)
        if validate_every_flip:
            primal, _ = woods_from_orientation(frame, arcs)
            violations = check_wood(primal)
            if violations:
                raise InvalidWood(f"Flip {stats.flips} broke the wood", violations)

    primal, _ = woods_from_orientation(frame, arcs)
    violations = check_wood(primal)
    if violations:
        raise InvalidWood("Minimized orientation is not a wood", violations)
    logger.info(
        f"Minimized wood with {stats.face_flips} face flips and"
        f" {stats.cycle_flips} cycle flips"
    )
    return primal, stats


def minimize(
    s: SchnyderWood,
    flip_cap_factor: int = 4,
    validate_every_flip: bool = True,
    frame: Optional[CompletionFrame] = None,
) -> SchnyderWood:
    """The minimal Schnyder wood below ``s`` in the lattice."""
    wood, _ = minimize_with_stats(s, flip_cap_factor, validate_every_flip, frame)
    return wood
