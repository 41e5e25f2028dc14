"""
Combinatorial plane embeddings.

A PlaneGraph is a rotation system over darts. Edge ``e`` owns the darts
``2e`` and ``2e + 1``; the twin of a dart is ``d ^ 1``. Every vertex keeps
its outgoing darts in clockwise order. Faces are the orbits of
``phi(d) = cw_next(twin(d))``, which keeps the face on the left of each
dart: inner faces are walked counterclockwise and the outer face clockwise.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from fourtree.domain.errors import (
    Disconnected,
    InconsistentRotation,
    NonSimple,
    NotGenusZero,
    NotInternally3Connected,
    RootsNotClockwise,
    RootsNotOnOuterFace,
)
from fourtree.utils.constants import next_color, prev_color
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)

RotationInput = Union[Sequence[Sequence[int]], Mapping[int, Sequence[int]]]


def twin(d: int) -> int:
    """Return the opposite dart of ``d``."""
    return d ^ 1


@dataclass(frozen=True)
class Face:
    """
    A face of a plane graph.

    Attributes:
        id: Face id
        boundary: Darts of the face in traversal order, face on the left
    """

    id: int
    boundary: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.boundary)


class PlaneGraph:
    """
    Rotation-system embedding of a connected plane (multi)graph.

    Instances are immutable after construction. ``allow_multi`` relaxes the
    simplicity invariant; it is used for duals only.
    """

    def __init__(
        self,
        n_vertices: int,
        heads: Sequence[int],
        rotations: Sequence[Sequence[int]],
        outer_dart: Optional[int] = None,
        allow_multi: bool = False,
    ):
        if len(heads) % 2:
            raise InconsistentRotation("Dart count must be even")
        if len(rotations) != n_vertices:
            raise InconsistentRotation(
                f"Expected {n_vertices} rotation lists, got {len(rotations)}"
            )
        self.n_vertices = n_vertices
        self.allow_multi = allow_multi
        self._heads = list(heads)
        self._rotations = [tuple(r) for r in rotations]

        self._tails = [-1] * len(self._heads)
        self._pos = [-1] * len(self._heads)
        for v, rot in enumerate(self._rotations):
            for i, d in enumerate(rot):
                if self._tails[d] != -1:
                    raise InconsistentRotation(f"Dart {d} appears in two rotations")
                self._tails[d] = v
                self._pos[d] = i
        missing = [d for d, t in enumerate(self._tails) if t == -1]
        if missing:
            raise InconsistentRotation(f"Darts {missing[:5]} are in no rotation")
        for d in range(len(self._heads)):
            if self._heads[twin(d)] != self._tails[d]:
                raise InconsistentRotation(
                    f"Twin of dart {d} does not lead back to its tail"
                )

        if not allow_multi:
            seen = set()
            for e in range(self.n_edges):
                u, w = self._tails[2 * e], self._heads[2 * e]
                if u == w:
                    raise NonSimple(f"Loop at vertex {u}")
                key = (min(u, w), max(u, w))
                if key in seen:
                    raise NonSimple(f"Parallel edges between {key[0]} and {key[1]}")
                seen.add(key)

        self._check_connected()
        self._compute_faces()

        n_faces = len(self._faces)
        if n_vertices - self.n_edges + n_faces != 2:
            raise NotGenusZero(n_vertices, self.n_edges, n_faces)

        self.outer_face_id = 0 if outer_dart is None else self._face_of[outer_dart]

        self._edge_index: Dict[Tuple[int, int], int] = {}
        self._parallel: Set[Tuple[int, int]] = set()
        for e in range(self.n_edges):
            u, w = self._tails[2 * e], self._heads[2 * e]
            if (u, w) in self._edge_index or u == w:
                self._parallel.update({(u, w), (w, u)})
            self._edge_index[(u, w)] = 2 * e
            self._edge_index[(w, u)] = 2 * e + 1

    def _check_connected(self) -> None:
        if self.n_vertices == 0:
            raise Disconnected("Graph has no vertices")
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self._rotations[v]:
                w = self._heads[d]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n_vertices:
            lonely = min(set(range(self.n_vertices)) - seen)
            raise Disconnected(f"Vertex {lonely} is not reachable from vertex 0")

    def _compute_faces(self) -> None:
        self._face_of = [-1] * len(self._heads)
        faces: List[Face] = []
        for start in range(len(self._heads)):
            if self._face_of[start] != -1:
                continue
            fid = len(faces)
            boundary = []
            d = start
            while self._face_of[d] == -1:
                self._face_of[d] = fid
                boundary.append(d)
                d = self.face_next(d)
            if d != start:
                raise InconsistentRotation(f"Face orbit from dart {start} is not closed")
            faces.append(Face(fid, tuple(boundary)))
        self._faces = faces

    # Darts and edges

    @property
    def n_darts(self) -> int:
        return len(self._heads)

    @property
    def n_edges(self) -> int:
        return len(self._heads) // 2

    @property
    def n_faces(self) -> int:
        return len(self._faces)

    @property
    def rotations(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self._rotations)

    def head(self, d: int) -> int:
        return self._heads[d]

    def tail(self, d: int) -> int:
        return self._tails[d]

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    def endpoints(self, e: int) -> Tuple[int, int]:
        """Endpoints of edge ``e`` as (tail of dart 2e, head of dart 2e)."""
        return self._tails[2 * e], self._heads[2 * e]

    def edges(self) -> List[Tuple[int, int]]:
        return [self.endpoints(e) for e in range(self.n_edges)]

    def dart(self, u: int, w: int) -> int:
        """Dart from ``u`` to ``w``; the pair must be joined by a single edge."""
        if (u, w) in self._parallel:
            raise NonSimple(f"Several edges join {u} and {w}")
        try:
            return self._edge_index[(u, w)]
        except KeyError:
            raise KeyError(f"No edge between {u} and {w}") from None

    def has_edge(self, u: int, w: int) -> bool:
        return (u, w) in self._edge_index

    def edge_between(self, u: int, w: int) -> int:
        return self.dart(u, w) >> 1

    def rotation(self, v: int) -> Tuple[int, ...]:
        return self._rotations[v]

    def position(self, d: int) -> int:
        """Index of ``d`` in the rotation of its tail."""
        return self._pos[d]

    def cw_next(self, d: int) -> int:
        rot = self._rotations[self._tails[d]]
        return rot[(self._pos[d] + 1) % len(rot)]

    def cw_prev(self, d: int) -> int:
        rot = self._rotations[self._tails[d]]
        return rot[(self._pos[d] - 1) % len(rot)]

    def face_next(self, d: int) -> int:
        return self.cw_next(d ^ 1)

    def neighbors(self, v: int) -> List[int]:
        """Neighbours of ``v`` in clockwise order."""
        return [self._heads[d] for d in self._rotations[v]]

    def degree(self, v: int) -> int:
        return len(self._rotations[v])

    # Faces

    @property
    def faces(self) -> List[Face]:
        return list(self._faces)

    def face(self, f: int) -> Face:
        return self._faces[f]

    def left_face(self, d: int) -> int:
        return self._face_of[d]

    def right_face(self, d: int) -> int:
        return self._face_of[d ^ 1]

    def face_vertices(self, f: int) -> List[int]:
        return [self._tails[d] for d in self._faces[f].boundary]

    def face_edges(self, f: int) -> List[int]:
        return [d >> 1 for d in self._faces[f].boundary]

    @property
    def outer_face(self) -> Face:
        return self._faces[self.outer_face_id]

    def outer_boundary(self) -> List[int]:
        """Vertices of the outer face in clockwise order."""
        return self.face_vertices(self.outer_face_id)

    def to_networkx(self) -> nx.Graph:
        """Undirected view; a MultiGraph keyed by edge id when multi-edges are allowed."""
        graph = nx.MultiGraph() if self.allow_multi else nx.Graph()
        graph.add_nodes_from(range(self.n_vertices))
        for e in range(self.n_edges):
            u, w = self.endpoints(e)
            if self.allow_multi:
                graph.add_edge(u, w, key=e, eid=e)
            else:
                graph.add_edge(u, w, eid=e)
        return graph

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces},"
            f" outer={self.outer_face_id})"
        )


def build_plane_graph(
    rotation_input: RotationInput,
    outer: Optional[Sequence[int]] = None,
) -> PlaneGraph:
    """
    Build a simple PlaneGraph from clockwise neighbour lists.

    Args:
        rotation_input: Per-vertex clockwise neighbour lists, either a list
            indexed by vertex or a mapping with keys ``0..n-1``
        outer: Optional clockwise outer boundary ``v0 v1 ...``; the outer
            face is the face left of the dart ``v0 -> v1``

    Returns:
        PlaneGraph: The embedded graph

    Raises:
        NonSimple: Loops or parallel edges
        InconsistentRotation: An edge listed on one side only
        Disconnected: The graph is not connected
        NotGenusZero: The rotation system is not planar
    """
    if isinstance(rotation_input, Mapping):
        n = len(rotation_input)
        if set(rotation_input) != set(range(n)):
            raise InconsistentRotation("Vertex ids must be 0..n-1")
        lists = [list(rotation_input[v]) for v in range(n)]
    else:
        lists = [list(r) for r in rotation_input]
        n = len(lists)

    counts: Dict[Tuple[int, int], int] = {}
    for v, nbrs in enumerate(lists):
        for u in nbrs:
            if not 0 <= u < n:
                raise InconsistentRotation(f"Vertex {v} lists unknown neighbour {u}")
            if u == v:
                raise NonSimple(f"Loop at vertex {v}")
            counts[(v, u)] = counts.get((v, u), 0) + 1
    for (v, u), c in counts.items():
        back = counts.get((u, v), 0)
        if back != c:
            raise InconsistentRotation(
                f"Edge {v}-{u} listed {c} time(s) at {v} but {back} time(s) at {u}"
            )
        if c > 1:
            raise NonSimple(f"Parallel edges between {v} and {u}")

    heads: List[int] = []
    index: Dict[Tuple[int, int], int] = {}
    for v, nbrs in enumerate(lists):
        for u in nbrs:
            if u > v:
                d = len(heads)
                heads.extend([u, v])
                index[(v, u)] = d
                index[(u, v)] = d + 1
    rotations = [[index[(v, u)] for u in nbrs] for v, nbrs in enumerate(lists)]

    outer_dart = None
    if outer is not None:
        if len(outer) < 2 or (outer[0], outer[1]) not in index:
            raise InconsistentRotation(f"Outer boundary {list(outer)} starts with a non-edge")
        outer_dart = index[(outer[0], outer[1])]

    g = PlaneGraph(n, heads, rotations, outer_dart=outer_dart)
    if outer is not None and not _same_cycle(g.outer_boundary(), list(outer)):
        raise InconsistentRotation(
            f"Outer boundary {list(outer)} is not the face left of {outer[0]}->{outer[1]}"
            f" (found {g.outer_boundary()})"
        )
    logger.debug(f"Built {g!r}")
    return g


def _same_cycle(walk: List[int], given: List[int]) -> bool:
    if len(walk) != len(given):
        return False
    start = walk.index(given[0]) if given[0] in walk else -1
    return start >= 0 and walk[start:] + walk[:start] == given


def face_walk(rotations: Sequence[Sequence[int]], u: int, w: int) -> List[int]:
    """
    Vertices of the face left of ``u -> w`` in a neighbour-list rotation system.

    Used by generators to name an outer face before building the graph.
    """
    walk = []
    a, b = u, w
    while True:
        walk.append(a)
        nbrs = rotations[b]
        c = nbrs[(list(nbrs).index(a) + 1) % len(nbrs)]
        a, b = b, c
        if (a, b) == (u, w):
            return walk


# Roots and suspension


@dataclass(frozen=True)
class Suspension:
    """
    A plane graph with three root half-edges in the outer face.

    Attributes:
        base: The underlying plane graph
        roots: (r1, r2, r3) on the outer face, clockwise
        half_edge_after: Per root, the dart after which its half-edge sits in
            clockwise order (the dart from the root to its predecessor on the
            clockwise outer walk)
    """

    base: PlaneGraph
    roots: Tuple[int, int, int]
    half_edge_after: Tuple[int, int, int]

    @property
    def half_edges(self) -> Tuple[int, int, int]:
        """Synthetic dart ids of the three half-edges."""
        n = self.base.n_darts
        return (n, n + 1, n + 2)

    def root_index(self, v: int) -> int:
        """1-based colour index of root ``v``, or 0."""
        for i, r in enumerate(self.roots):
            if r == v:
                return i + 1
        return 0

    def extended_rotation(self, v: int) -> List[int]:
        """Clockwise rotation of ``v`` with its half-edge dart, if any."""
        rot = list(self.base.rotation(v))
        i = self.root_index(v)
        if i:
            slot = self.base.position(self.half_edge_after[i - 1])
            rot.insert(slot + 1, self.half_edges[i - 1])
        return rot

    def outer_path(self, i: int) -> List[int]:
        """
        Darts of the clockwise outer path from r_{i+1} to r_{i+2}.

        ``i`` is 1-based; the returned darts have the outer face on their left.
        """
        g = self.base
        start = self.roots[i % 3]
        stop = self.roots[(i + 1) % 3]
        boundary = g.outer_face.boundary
        k = next(j for j, d in enumerate(boundary) if g.tail(d) == start)
        path = []
        while True:
            d = boundary[k % len(boundary)]
            if g.tail(d) == stop:
                return path
            path.append(d)
            k += 1


def check_roots(g: PlaneGraph, roots: Sequence[int]) -> Tuple[int, int, int]:
    """
    Validate a root triple against the outer face.

    Raises:
        RootsNotOnOuterFace: A root is missing from the outer face or roots repeat
        RootsNotClockwise: Roots are not in clockwise order
    """
    if len(roots) != 3 or len(set(roots)) != 3:
        raise RootsNotOnOuterFace(f"Need three distinct roots, got {list(roots)}")
    walk = g.outer_boundary()
    first: Dict[int, int] = {}
    for i, v in enumerate(walk):
        first.setdefault(v, i)
    off = [r for r in roots if r not in first]
    if off:
        raise RootsNotOnOuterFace(f"Roots {off} are not on the outer face {walk}")
    p1, p2, p3 = (first[r] for r in roots)
    size = len(walk)
    if not (p2 - p1) % size < (p3 - p1) % size:
        raise RootsNotClockwise(f"Roots {list(roots)} are not clockwise along {walk}")
    return tuple(roots)  # type: ignore[return-value]


def default_roots(g: PlaneGraph) -> Tuple[int, int, int]:
    """Lowest-id outer vertex and the next two vertices clockwise."""
    walk = g.outer_boundary()
    start = walk.index(min(walk))
    picked: List[int] = []
    for v in walk[start:] + walk[:start]:
        if v not in picked:
            picked.append(v)
        if len(picked) == 3:
            break
    if len(picked) < 3:
        raise RootsNotOnOuterFace(f"Outer face {walk} has fewer than three vertices")
    return tuple(picked)  # type: ignore[return-value]


def _apex_graph(g: PlaneGraph, roots: Sequence[int]) -> nx.Graph:
    graph = g.to_networkx()
    apex = g.n_vertices
    graph.add_edges_from((apex, r) for r in roots)
    return graph


def find_separator(g: PlaneGraph, roots: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    A separating set of size < 3 in G plus the root apex, or None.

    Removes each vertex in turn and looks for an articulation point in
    what remains. The apex has id ``g.n_vertices``.
    """
    graph = _apex_graph(g, roots)
    if graph.number_of_nodes() < 4:
        return None
    if not nx.is_connected(graph):
        return ()
    for v in sorted(graph):
        rest = graph.subgraph(n for n in graph if n != v)
        if not nx.is_connected(rest):
            return (v,)
        cut = next(nx.articulation_points(rest), None)
        if cut is not None:
            return (v, cut)
    return None


def separating_pairs(g: PlaneGraph, roots: Sequence[int]) -> List[Tuple[int, int]]:
    """All vertex pairs whose removal disconnects G plus the root apex (brute force)."""
    graph = _apex_graph(g, roots)
    pairs = []
    for a, b in itertools.combinations(sorted(graph), 2):
        rest = graph.copy()
        rest.remove_nodes_from((a, b))
        if rest.number_of_nodes() and not nx.is_connected(rest):
            pairs.append((a, b))
    return pairs


def is_sigma_internally_3_connected(g: PlaneGraph, roots: Sequence[int]) -> bool:
    """
    True iff G plus an apex adjacent to the three roots is 3-connected.

    Raises:
        RootsNotOnOuterFace: Roots are not on the outer face
        RootsNotClockwise: Roots are not clockwise
    """
    check_roots(g, roots)
    return find_separator(g, roots) is None


def suspend(g: PlaneGraph, roots: Sequence[int], check: bool = True) -> Suspension:
    """
    Attach the three root half-edges in the outer face.

    Args:
        g: The plane graph
        roots: (r1, r2, r3) clockwise on the outer face
        check: Run the internal 3-connectivity test

    Raises:
        NotInternally3Connected: The connectivity test fails
    """
    roots = check_roots(g, roots)
    if check:
        separator = find_separator(g, roots)
        if separator is not None:
            raise NotInternally3Connected(roots, separator)
    boundary = g.outer_face.boundary
    after = []
    for r in roots:
        # the outer dart entering r, read from r's side
        entering = next(d for d in boundary if g.head(d) == r)
        after.append(twin(entering))
    logger.debug(f"Suspended {g!r} at roots {roots}")
    return Suspension(g, roots, tuple(after))  # type: ignore[arg-type]


# Duals


@dataclass(frozen=True)
class DualMap:
    """
    The planar dual with its edge bijection.

    Dual edge ids equal primal edge ids: primal dart ``d`` becomes the dual
    dart ``d`` running from the face left of ``d`` to the face right of it.

    Attributes:
        dual_graph: The dual, multigraph-tolerant
        edge_bijection: Primal edge id to dual edge id
        face_vertex: Primal face id to dual vertex id
        dart_into: Primal vertex to one primal dart heading into it
    """

    dual_graph: PlaneGraph
    edge_bijection: Dict[int, int]
    face_vertex: Dict[int, int]
    dart_into: Dict[int, int]

    def dual_edge(self, e: int) -> int:
        """Dual edge crossing primal edge ``e``; the bijection is the identity both ways."""
        return self.edge_bijection[e]

    def vertex_face(self, v: int) -> int:
        """Dual face surrounding primal vertex ``v``."""
        g = self.dual_graph
        # any primal dart heading into v; its dual has v's face on the left
        return g.left_face(self.dart_into[v])


def dual(g: PlaneGraph) -> DualMap:
    """
    Planar dual of ``g``.

    One dual vertex per face; the clockwise rotation at a dual vertex is the
    reversed boundary of its face. The dual's outer face is the face around
    the first vertex of the primal outer boundary.

    Dualizing twice gives ``g`` back up to dart reversal: dart ``d`` of the
    double dual runs from the face of ``head(d)`` to the face of ``tail(d)``.
    """
    heads = [0] * g.n_darts
    for d in range(g.n_darts):
        heads[d] = g.right_face(d)
    rotations = [tuple(reversed(f.boundary)) for f in g.faces]
    into = {g.head(d): d for d in range(g.n_darts)}
    outer_v = g.outer_boundary()[0]
    graph = PlaneGraph(
        g.n_faces, heads, rotations, outer_dart=into[outer_v], allow_multi=True
    )
    return DualMap(
        graph,
        {e: e for e in range(g.n_edges)},
        {f.id: f.id for f in g.faces},
        into,
    )


def as_simple(g: PlaneGraph) -> PlaneGraph:
    """Rebuild a multigraph-tolerant plane graph as a simple one."""
    lists = [g.neighbors(v) for v in range(g.n_vertices)]
    walk = g.outer_boundary()
    return build_plane_graph(lists, outer=walk)


@dataclass(frozen=True)
class SuspendedDual:
    """
    The suspended dual of a suspension.

    The outer face vertex of the ordinary dual is replaced by a triangle
    b1, b2, b3, where b_i lies beyond the clockwise outer path from r_{i+1}
    to r_{i+2}. Dual edge ``e`` keeps the id of its primal edge; the triangle
    edge crossing the half-edge of r_i has id ``E + i - 1`` and runs from
    b_{i-1} to b_{i+1} along its even dart.

    Attributes:
        primal: The primal suspension
        suspension: The suspended dual, rooted at (b1, b2, b3)
        face_vertex: Inner primal face id to dual vertex id
        b: Vertex ids of b1, b2, b3
        outer_owner: Outer primal edge id to the index i of its b_i
    """

    primal: Suspension
    suspension: Suspension
    face_vertex: Dict[int, int]
    b: Tuple[int, int, int]
    outer_owner: Dict[int, int]

    @property
    def graph(self) -> PlaneGraph:
        return self.suspension.base

    @property
    def n_primal_edges(self) -> int:
        return self.primal.base.n_edges

    def is_triangle_edge(self, e: int) -> bool:
        return e >= self.n_primal_edges

    def triangle_edge(self, i: int) -> int:
        """Id of the triangle edge crossing the half-edge of r_i."""
        return self.n_primal_edges + i - 1

    def vertex_of_face(self, f: int, e: int) -> int:
        """Dual vertex standing for face ``f`` seen across primal edge ``e``."""
        if f != self.primal.base.outer_face_id:
            return self.face_vertex[f]
        return self.b[self.outer_owner[e] - 1]


def _outer_owner(susp: Suspension) -> Dict[int, int]:
    owner = {}
    for i in (1, 2, 3):
        for d in susp.outer_path(i):
            owner[d >> 1] = i
    return owner


def triangle_dart(n_edges: int, x: int, y: int) -> int:
    """Dart from b_x to b_y in a suspended dual over ``n_edges`` primal edges."""
    i = 6 - x - y
    d = 2 * (n_edges + i - 1)
    return d if x == prev_color(i) else d + 1


def suspended_dual(susp: Suspension) -> SuspendedDual:
    """Build the suspended dual of ``susp``."""
    g = susp.base
    n_edges = g.n_edges
    inner = [f.id for f in g.faces if f.id != g.outer_face_id]
    face_vertex = {f: i for i, f in enumerate(inner)}
    b = tuple(len(inner) + i for i in range(3))
    owner = _outer_owner(susp)

    def side(f: int, e: int) -> int:
        if f != g.outer_face_id:
            return face_vertex[f]
        return b[owner[e] - 1]

    heads = [0] * (2 * n_edges + 6)
    for d in range(g.n_darts):
        heads[d] = side(g.right_face(d), d >> 1)
    for i in (1, 2, 3):
        d = 2 * (n_edges + i - 1)
        heads[d] = b[next_color(i) - 1]
        heads[d + 1] = b[prev_color(i) - 1]

    rotations: List[List[int]] = [
        list(reversed(g.face(f).boundary)) for f in inner
    ]
    for i in (1, 2, 3):
        path = [d for d in reversed(susp.outer_path(i))]
        rotations.append(
            [triangle_dart(n_edges, i, next_color(i))]
            + path
            + [triangle_dart(n_edges, i, prev_color(i))]
        )

    graph = PlaneGraph(
        len(inner) + 3,
        heads,
        rotations,
        outer_dart=triangle_dart(n_edges, 1, 2),
        allow_multi=True,
    )
    after = tuple(triangle_dart(n_edges, i, prev_color(i)) for i in (1, 2, 3))
    dual_susp = Suspension(graph, b, after)  # type: ignore[arg-type]
    return SuspendedDual(susp, dual_susp, face_vertex, b, owner)  # type: ignore[arg-type]
