"""
Ordered path partitions compatible with a Schnyder wood.

For a colour j the maximal paths of edges bidirected in colours j and j+1
partition the vertices. Ordered along the reachability order of the
reversed j and (j+1) trees together with the (j+2) tree, they grow the
graph from the outer path between r_j and r_{j+1}; each path attaches to
the current contour at its left neighbour v_0 and right neighbour v_{k+1}
and covers the contour between them.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from fourtree.core.completion import is_minimal
from fourtree.core.plane_graph import PlaneGraph
from fourtree.core.schnyder import SchnyderWood, Violation
from fourtree.domain.errors import CycleInOrderGraph, InvalidWood, MissingNeighbor, NotMinimalWood
from fourtree.utils.constants import next_color
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class OrderedPathPartition:
    """
    A compatible ordered path partition P_0..P_s.

    Attributes:
        j: The first colour of the path colour pair
        base_pair: (r_j, r_{j+1})
        paths: Vertex sequences v_1..v_k, where v_1 -> v_2 is the outgoing
            j-coloured edge of v_1; P_0 runs from r_{j+1} to r_j
        left_right: Per path, (v_0, v_{k+1}); None for P_0
        covered_vertices: Per path, the contour vertices it covers, in order
        covered_edges: Per path, the contour edges it covers, from v_0 on
        cover_index: Edge id to the index of the path covering it
        path_of: Vertex to path index
    """

    j: int
    base_pair: Tuple[int, int]
    paths: Tuple[Tuple[int, ...], ...]
    left_right: Tuple[Optional[Tuple[int, int]], ...]
    covered_vertices: Tuple[Tuple[int, ...], ...]
    covered_edges: Tuple[Tuple[int, ...], ...]
    cover_index: Dict[int, int]
    path_of: Dict[int, int]

    @property
    def s(self) -> int:
        return len(self.paths) - 1

    def __len__(self) -> int:
        return len(self.paths)


def _path_colored(s: SchnyderWood, e: int, j: int) -> bool:
    return {s.out_color[2 * e], s.out_color[2 * e + 1]} == {j, next_color(j)}


def maximal_paths(s: SchnyderWood, j: int) -> List[Tuple[int, ...]]:
    """Maximal j-(j+1) bidirected paths, each oriented along its j-coloured directions."""
    g = s.graph
    nxt: Dict[int, int] = {}
    has_prev: Set[int] = set()
    for e in range(g.n_edges):
        if not _path_colored(s, e, j):
            continue
        d = 2 * e if s.out_color[2 * e] == j else 2 * e + 1
        u, w = g.tail(d), g.head(d)
        nxt[u] = w
        has_prev.add(w)
    paths = []
    seen: Set[int] = set()
    for v in range(g.n_vertices):
        if v in has_prev:
            continue
        path = [v]
        while path[-1] in nxt:
            if nxt[path[-1]] in seen or nxt[path[-1]] in path:
                raise InvalidWood(f"Colour {j}-{next_color(j)} edges close a cycle at {v}")
            path.append(nxt[path[-1]])
        seen.update(path)
        paths.append(tuple(path))
    if len(seen) != g.n_vertices:
        raise InvalidWood(f"Colour {j}-{next_color(j)} edges contain a cycle")
    return paths


def order_graph(s: SchnyderWood, j: int, path_of: Dict[int, int]) -> nx.DiGraph:
    """Paths contracted in the union of reversed T_j, reversed T_{j+1} and T_{j+2}."""
    g = s.graph
    dag = nx.DiGraph()
    dag.add_nodes_from(set(path_of.values()))
    far = next_color(next_color(j))
    for d in range(g.n_darts):
        c = s.out_color[d]
        if not c:
            continue
        a, b = path_of[g.tail(d)], path_of[g.head(d)]
        if a == b:
            continue
        if c == far:
            dag.add_edge(a, b)
        else:
            dag.add_edge(b, a)
    return dag


def _outer_path(g: PlaneGraph, start: int, stop: int) -> List[int]:
    """Vertices of the clockwise outer walk from ``start`` to ``stop``."""
    walk = g.outer_boundary()
    k = walk.index(start)
    path = []
    while True:
        v = walk[k % len(walk)]
        path.append(v)
        if v == stop:
            return path
        k += 1


def compatible_opp(s: SchnyderWood, j: int = 2) -> OrderedPathPartition:
    """
    The ordered path partition compatible with ``s`` for the colour pair j, j+1.

    Among the paths whose predecessors are placed, the one whose left
    neighbour sits closest to r_{j+1} on the current contour goes first,
    then the one with the smallest vertex.

    Raises:
        InvalidWood: The j-(j+1) paths do not start from the outer path
        CycleInOrderGraph: The order graph has a directed cycle
        MissingNeighbor: A path does not attach to the current contour
    """
    g = s.graph
    roots = s.roots
    r_j, r_j1, r_far = roots[j - 1], roots[next_color(j) - 1], roots[next_color(next_color(j)) - 1]
    raw = maximal_paths(s, j)
    path_of = {v: i for i, p in enumerate(raw) for v in p}

    first = path_of[r_j]
    expected = list(reversed(_outer_path(g, r_j, r_j1)))
    if list(raw[first]) != expected:
        raise InvalidWood(
            f"Path through r_{j} is {list(raw[first])}, expected outer path {expected}"
        )
    if raw[path_of[r_far]] != (r_far,):
        raise InvalidWood(f"Root {r_far} is not a singleton path")

    dag = order_graph(s, j, path_of)
    if not nx.is_directed_acyclic_graph(dag):
        cycle = nx.find_cycle(dag)
        raise CycleInOrderGraph(f"Order graph has a cycle through paths {cycle}")
    if dag.in_degree(first):
        raise CycleInOrderGraph(f"The outer path r_{j}..r_{j + 1} has a predecessor")

    ends = {}
    for i, p in enumerate(raw):
        if i == first:
            continue
        v0 = g.head(s.out_dart(p[0], next_color(j)))
        vk1 = g.head(s.out_dart(p[-1], j))
        ends[i] = (v0, vk1)

    contour_v = list(raw[first])
    contour_e = [g.edge_between(a, b) for a, b in zip(contour_v, contour_v[1:])]
    position = {v: t for t, v in enumerate(contour_v)}

    paths = [raw[first]]
    left_right: List[Optional[Tuple[int, int]]] = [None]
    covered_vertices: List[Tuple[int, ...]] = [()]
    covered_edges: List[Tuple[int, ...]] = [()]
    cover_index: Dict[int, int] = {}

    indegree = {i: dag.in_degree(i) for i in dag}
    ready: List[int] = [i for i in dag if i != first and indegree[i] == 0]

    def release(i: int) -> None:
        for w in dag.successors(i):
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)

    placed: Set[int] = set(contour_v)

    def attaches(i: int) -> bool:
        v0, vk1 = ends[i]
        if v0 not in position or vk1 not in position or position[v0] >= position[vk1]:
            return False
        own = set(raw[i])
        below = contour_v[position[v0] + 1 : position[vk1]]
        return all(w in placed or w in own for x in below for w in g.neighbors(x))

    release(first)
    while ready:
        ranked = sorted(
            ready,
            key=lambda i: (position.get(ends[i][0], len(position)), min(raw[i])),
        )
        best = next((i for i in ranked if attaches(i)), ranked[0])
        ready.remove(best)
        p = raw[best]
        v0, vk1 = ends[best]
        if v0 not in position or vk1 not in position:
            missing = v0 if v0 not in position else vk1
            raise MissingNeighbor(f"Path {list(p)}: neighbour {missing} is not on the contour")
        a, b = position[v0], position[vk1]
        if a >= b:
            raise MissingNeighbor(
                f"Path {list(p)}: left neighbour {v0} does not precede right neighbour {vk1}"
            )
        index = len(paths)
        covered_vertices.append(tuple(contour_v[a + 1 : b]))
        covered_edges.append(tuple(contour_e[a:b]))
        for e in contour_e[a:b]:
            cover_index[e] = index
        new_edges = (
            [g.edge_between(v0, p[0])]
            + [g.edge_between(x, y) for x, y in zip(p, p[1:])]
            + [g.edge_between(p[-1], vk1)]
        )
        contour_v = contour_v[: a + 1] + list(p) + contour_v[b:]
        contour_e = contour_e[:a] + new_edges + contour_e[b:]
        position = {v: t for t, v in enumerate(contour_v)}
        placed.update(p)
        paths.append(p)
        left_right.append((v0, vk1))
        release(best)

    if len(paths) != len(raw):
        raise CycleInOrderGraph(f"Only {len(paths)} of {len(raw)} paths could be ordered")
    if paths[-1] != (r_far,):
        raise InvalidWood(f"Last path is {list(paths[-1])}, expected root {r_far}")

    opp = OrderedPathPartition(
        j=j,
        base_pair=(r_j, r_j1),
        paths=tuple(paths),
        left_right=tuple(left_right),
        covered_vertices=tuple(covered_vertices),
        covered_edges=tuple(covered_edges),
        cover_index=cover_index,
        path_of={v: i for i, p in enumerate(paths) for v in p},
    )
    logger.debug(f"Compatible partition for colour {j}: {len(paths)} paths")
    return opp


def extension(g: PlaneGraph, opp: OrderedPathPartition, i: int) -> Tuple[int, int, int, int]:
    """
    Left and right neighbours of P_i with its two extension edges.

    Returns:
        Tuple[int, int, int, int]: (v_0, v_{k+1}, edge v_0v_1, edge v_kv_{k+1})

    Raises:
        MissingNeighbor: ``i`` is 0 or out of range, or an extension edge is absent
    """
    if not 1 <= i <= opp.s:
        raise MissingNeighbor(f"Path {i} has no extension")
    v0, vk1 = opp.left_right[i]
    p = opp.paths[i]
    if not g.has_edge(v0, p[0]) or not g.has_edge(p[-1], vk1):
        raise MissingNeighbor(f"Path {i} is not adjacent to its neighbours {v0}, {vk1}")
    return v0, vk1, g.edge_between(v0, p[0]), g.edge_between(p[-1], vk1)


def extension_edges(g: PlaneGraph, opp: OrderedPathPartition, i: int) -> List[int]:
    """Edges of the extension v_0 v_1 ... v_k v_{k+1} of P_i, in order."""
    _, _, first, last = extension(g, opp, i)
    p = opp.paths[i]
    return [first] + [g.edge_between(x, y) for x, y in zip(p, p[1:])] + [last]


def contours(g: PlaneGraph, opp: OrderedPathPartition) -> List[List[int]]:
    """
    Contours C_0..C_{s-1} recomputed from the embedding.

    C_i is read by walking the outer face of the subgraph induced by
    P_0..P_i, starting on the outer path at r_j, and keeping the part of
    the walk from r_{j+1} to r_j.
    """
    r_j, r_j1 = opp.base_pair
    p0 = opp.paths[0]
    inside = [False] * g.n_vertices
    result = []
    for i in range(opp.s):
        for v in opp.paths[i]:
            inside[v] = True
        d = g.dart(r_j, p0[-2])
        walk: List[int] = []
        collecting = False
        for _ in range(2 * g.n_darts + 2):
            u = g.tail(d)
            if u == r_j1:
                collecting = True
            if collecting:
                walk.append(u)
                if u == r_j:
                    break
            d = g.cw_next(d ^ 1)
            while not inside[g.head(d)]:
                d = g.cw_next(d)
        result.append(walk)
    return result


def check_opp(g: PlaneGraph, opp: OrderedPathPartition) -> List[Violation]:
    """
    Check the partition conditions against contours recomputed from scratch.

    Conditions: the paths partition V and are induced; P_0 is the clockwise
    outer path r_j..r_{j+1} and P_s the third root; every vertex of P_i has
    a neighbour outside V_i; every contour is a path; every contour vertex
    has at most one neighbour in the next path; every vertex of P_i lies on
    C_i.
    """
    found: List[Violation] = []
    r_j, r_j1 = opp.base_pair
    counts: Dict[int, int] = {}
    for p in opp.paths:
        for v in p:
            counts[v] = counts.get(v, 0) + 1
    twice = sorted(v for v, c in counts.items() if c > 1)
    missing = sorted(set(range(g.n_vertices)) - set(counts))
    if twice or missing:
        found.append(
            Violation(1, "partition", (), f"repeated vertices {twice}, missing vertices {missing}")
        )
        return found

    expected = list(reversed(_outer_path(g, r_j, r_j1)))
    if list(opp.paths[0]) != expected:
        found.append(
            Violation(1, "path 0", (), f"{list(opp.paths[0])} is not the outer path {expected}")
        )
        return found
    if len(opp.paths[-1]) != 1 or opp.paths[-1][0] in opp.paths[0]:
        found.append(Violation(1, f"path {opp.s}", (), "last path is not a single root"))

    for i, p in enumerate(opp.paths):
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                found.append(Violation(1, f"path {i}", (), f"{a} and {b} are not adjacent"))
        members = set(p)
        for t, v in enumerate(p):
            for w in g.neighbors(v):
                if w in members and abs(p.index(w) - t) > 1:
                    found.append(
                        Violation(1, f"path {i}", (g.edge_between(v, w),), f"chord {v}-{w}")
                    )

    index_of = {v: i for i, p in enumerate(opp.paths) for v in p}
    walks = contours(g, opp)
    for i in range(opp.s):
        for v in opp.paths[i]:
            if all(index_of[w] <= i for w in g.neighbors(v)):
                found.append(
                    Violation(2, f"path {i}", (), f"vertex {v} has no neighbour in a later path")
                )
        walk = walks[i]
        if not walk or walk[-1] != r_j or len(set(walk)) != len(walk):
            found.append(Violation(3, f"contour {i}", (), f"contour {walk} is not a path"))
            continue
        on_walk = set(walk)
        for v in opp.paths[i]:
            if v not in on_walk:
                found.append(Violation(3, f"contour {i}", (), f"vertex {v} of P_{i} is not on it"))
        later = set(opp.paths[i + 1])
        for v in walk:
            if sum(1 for w in g.neighbors(v) if w in later) > 1:
                found.append(
                    Violation(
                        4, f"contour {i}", (), f"vertex {v} has several neighbours in P_{i + 1}"
                    )
                )
    return found


def check_compatibility(s: SchnyderWood, opp: OrderedPathPartition) -> List[Violation]:
    """Paths are the maximal j-(j+1) paths and their order extends the order graph."""
    found: List[Violation] = []
    raw = maximal_paths(s, opp.j)
    if sorted(raw) != sorted(opp.paths):
        found.append(
            Violation(1, "paths", (), "paths differ from the maximal bidirected paths")
        )
        return found
    path_of = {v: i for i, p in enumerate(opp.paths) for v in p}
    dag = order_graph(s, opp.j, path_of)
    for a, b in dag.edges:
        if a >= b:
            found.append(
                Violation(1, "order", (), f"path {a} must precede path {b} but does not")
            )
    return found


def check_extensions(s: SchnyderWood, opp: OrderedPathPartition) -> List[Violation]:
    """
    Local structure of every path P_i with i >= 1.

    Every earlier neighbour lies on C_{i-1} between v_0 and v_{k+1}; the
    extension edges exist, v_0v_1 being (j+1)-coloured out of v_1 and
    v_kv_{k+1} j-coloured out of v_k; every other edge into V_{i-1} is
    unidirected toward P_i in colour j+2 and avoids v_0 and v_{k+1}.
    """
    g = s.graph
    j = opp.j
    far = next_color(next_color(j))
    found: List[Violation] = []
    walks = contours(g, opp)
    index_of = opp.path_of
    for i in range(1, opp.s + 1):
        p = opp.paths[i]
        where = f"path {i}"
        try:
            v0, vk1, first, last = extension(g, opp, i)
        except MissingNeighbor as e:
            found.append(Violation(2, where, (), str(e)))
            continue
        walk = walks[i - 1]
        if v0 not in walk or vk1 not in walk or walk.index(v0) >= walk.index(vk1):
            message = f"neighbours {v0}, {vk1} out of order on C_{i - 1}"
            found.append(Violation(1, where, (), message))
            continue
        between = set(walk[walk.index(v0) : walk.index(vk1) + 1])
        if s.out_color[g.dart(p[0], v0)] != next_color(j):
            message = f"{p[0]}->{v0} is not outgoing {next_color(j)}"
            found.append(Violation(3, where, (first,), message))
        if s.out_color[g.dart(p[-1], vk1)] != j:
            found.append(Violation(3, where, (last,), f"{p[-1]}->{vk1} is not outgoing {j}"))
        for v in p:
            for d in g.rotation(v):
                x = g.head(d)
                e = d >> 1
                if index_of[x] >= i or e in (first, last):
                    continue
                if x not in between:
                    message = f"neighbour {x} lies outside v_0..v_k+1"
                    found.append(Violation(1, where, (e,), message))
                if s.out_color[d] or s.out_color[d ^ 1] != far or x in (v0, vk1):
                    found.append(
                        Violation(4, where, (e,), f"edge {x}->{v} is not unidirected colour {far}")
                    )
    return found


def check_lower_edges(s: SchnyderWood, opp: OrderedPathPartition) -> List[Violation]:
    """
    On a minimal wood every edge from P_i into V_{i-1} other than the
    extension edges is unidirected in colour j+2 and enters the last vertex
    v_k, from a vertex other than v_0 and v_{k+1}.

    Raises:
        NotMinimalWood: ``s`` is not the minimal wood
    """
    if not is_minimal(s):
        raise NotMinimalWood("Lower-edge structure only holds for the minimal wood")
    g = s.graph
    far = next_color(next_color(opp.j))
    found: List[Violation] = []
    for i in range(1, opp.s + 1):
        p = opp.paths[i]
        v0, vk1, first, last = extension(g, opp, i)
        for v in p:
            for d in g.rotation(v):
                x = g.head(d)
                e = d >> 1
                if opp.path_of[x] >= i or e in (first, last):
                    continue
                ok = (
                    v == p[-1]
                    and not s.out_color[d]
                    and s.out_color[d ^ 1] == far
                    and x not in (v0, vk1)
                )
                if not ok:
                    found.append(
                        Violation(
                            3,
                            f"path {i}",
                            (e,),
                            f"edge {x}-{v} is not a colour-{far} edge into v_k={p[-1]}",
                        )
                    )
    return found


def format_opp(opp: OrderedPathPartition) -> List[str]:
    """One line per path: ``i: v1 ... vk | left=v0 right=vk1``."""
    lines = []
    for i, p in enumerate(opp.paths):
        body = " ".join(str(v) for v in p)
        if opp.left_right[i] is None:
            lines.append(f"{i}: {body} | left=- right=-")
        else:
            v0, vk1 = opp.left_right[i]
            lines.append(f"{i}: {body} | left={v0} right={vk1}")
    return lines

