"""
Tree / co-tree pairs of maximum degree four.

The candidate graph H holds the bidirected edges of the minimal wood. Its
cycles are broken by a deletion set D picked along the ordered path
partition for the colours 2 and 3: every path that tops a cycle of H gives
up exactly one edge of its extension, chosen while processing the path
that covers that extension first. The same selection on the dual wood
yields D', and the pair is

    tree    = H - D + D'*
    co-tree = not(H)* - D' + D*
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from fourtree.core.completion import (
    CompletionFrame,
    FlipStats,
    completion_frame,
    compute_wood,
    is_minimal,
    minimize_with_stats,
)
from fourtree.core.opp import OrderedPathPartition, compatible_opp, extension, extension_edges
from fourtree.core.plane_graph import PlaneGraph, Suspension, dual
from fourtree.core.schnyder import SchnyderWood, dual_wood
from fourtree.core.verify import check_root_degrees, degrees, verify_tree_pair
from fourtree.domain.entities import (
    Certificate,
    CertificateKind,
    DeletionRecord,
    DeletionSet,
    Rule,
    TreePair,
    failed,
    passed,
)
from fourtree.domain.errors import (
    CaseExhaustion,
    InvalidWood,
    NoCoveringPath,
    NotMinimalWood,
    PostconditionFailure,
)
from fourtree.utils.constants import next_color
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)

MAX_CANDIDATE_DEGREE = 3
MAX_FACE_DEGREE = 4


@dataclass(frozen=True)
class CandidateGraph:
    """
    Bidirected edges of a wood, as a spanning subgraph of its host.

    Attributes:
        host: The graph the wood lives on (G, or the suspended dual)
        edges: Ids of the bidirected edges
        n_real: Edges with a smaller id are edges of G or G*; on the dual
            side the three triangle edges b1b2, b2b3, b3b1 lie above it
    """

    host: PlaneGraph
    edges: FrozenSet[int]
    n_real: int

    def __contains__(self, e: int) -> bool:
        return e in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for d in self.host.rotation(v) if (d >> 1) in self.edges)

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.host.n_vertices))

    def to_networkx(self, without: FrozenSet[int] = frozenset()) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.host.n_vertices))
        for e in self.edges:
            if e not in without:
                u, w = self.host.endpoints(e)
                graph.add_edge(u, w, key=e)
        return graph


def candidate(
    s: SchnyderWood,
    check_minimal: bool = True,
    n_real: Optional[int] = None,
    frame: Optional[CompletionFrame] = None,
) -> CandidateGraph:
    """
    The candidate graph of a minimal wood.

    Raises:
        NotMinimalWood: ``check_minimal`` is set and ``s`` is not minimal
        InvalidWood: A vertex has more than three bidirected edges, or the
            outer boundary is not bidirected
    """
    if check_minimal and not is_minimal(s, frame):
        raise NotMinimalWood("The candidate graph needs the minimal wood")
    g = s.graph
    h = CandidateGraph(
        g, frozenset(s.bidirected_edges()), g.n_edges if n_real is None else n_real
    )
    crowded = [v for v in range(g.n_vertices) if h.degree(v) > MAX_CANDIDATE_DEGREE]
    if crowded:
        raise InvalidWood(f"Vertices {crowded} have more than three bidirected edges")
    open_outer = [e for e in g.face_edges(g.outer_face_id) if e not in h]
    if open_outer:
        raise InvalidWood(f"Outer edges {open_outer} are not bidirected")
    return h


def index_maximal_subpaths(h: CandidateGraph, opp: OrderedPathPartition) -> Set[int]:
    """
    Indices of the paths that top a cycle of ``h``.

    P_i qualifies when its path edges and both extension edges are in ``h``
    and its neighbours v_0 and v_{k+1} are joined in ``h`` restricted to
    V_{i-1}. The partition is swept once with a union-find over V_{i-1}.
    """
    g = h.host
    parent = list(range(g.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    placed = [False] * g.n_vertices

    def place(i: int) -> None:
        for v in opp.paths[i]:
            placed[v] = True
        for v in opp.paths[i]:
            for d in g.rotation(v):
                w = g.head(d)
                if placed[w] and (d >> 1) in h:
                    parent[find(v)] = find(w)

    found: Set[int] = set()
    place(0)
    for i in range(1, opp.s + 1):
        v0, vk1 = opp.left_right[i]
        if all(e in h for e in extension_edges(g, opp, i)) and find(v0) == find(vk1):
            found.add(i)
        place(i)
    logger.debug(f"Index-maximal paths: {sorted(found)}")
    return found


def index_maximal_oracle(h: CandidateGraph, opp: OrderedPathPartition) -> Set[int]:
    """Highest path index over every simple cycle of ``h``, by enumeration."""
    graph = h.to_networkx()
    return {max(opp.path_of[v] for v in cycle) for cycle in nx.simple_cycles(graph)}


def minimal_covering_paths(
    g: PlaneGraph, opp: OrderedPathPartition, pmax: Set[int]
) -> Dict[int, int]:
    """
    For every index-maximal path but P_s, the lowest path covering an
    edge of its extension.

    Raises:
        NoCoveringPath: No later path covers the extension
    """
    covering = {}
    for i in sorted(pmax):
        if i == opp.s:
            continue
        covers = [opp.cover_index[e] for e in extension_edges(g, opp, i) if e in opp.cover_index]
        if not covers:
            raise NoCoveringPath(f"No path covers the extension of P_{i} {list(opp.paths[i])}")
        covering[i] = min(covers)
    return covering


def _case(
    g: PlaneGraph, opp: OrderedPathPartition, pmax: Set[int], c: int, deletions: DeletionSet
) -> Rule:
    if c not in pmax:
        return Rule.CASE_1
    ext = extension_edges(g, opp, c)
    if any(e in deletions for e in ext[:-1]):
        return Rule.CASE_2_1
    if ext[-1] in deletions:
        return Rule.CASE_2_2
    raise CaseExhaustion(
        f"P_{c} tops a cycle but none of its extension edges {ext} is deleted yet"
    )


def _pick(
    g: PlaneGraph,
    opp: OrderedPathPartition,
    c: int,
    t: int,
    rule: Rule,
    first: bool,
    last: bool,
    covered: Set[int],
) -> Tuple[int, str]:
    """Edge of the extension of P_t to delete while processing P_c; ``covered`` are P_c's edges."""
    p = opp.paths[t]
    for x, y in zip(p, p[1:]):
        e = g.edge_between(x, y)
        if e in covered:
            return e, "a"
    _, _, left_edge, right_edge = extension(g, opp, t)
    c_left, c_right = opp.left_right[c]
    if rule is Rule.CASE_2_2:
        if first and p[-1] == c_left:
            return right_edge, "b"
        return left_edge, "c"
    if last and p[0] == c_right:
        return left_edge, "b"
    return right_edge, "c"


def select_deletions(
    s: SchnyderWood,
    opp: OrderedPathPartition,
    pmax: Set[int],
    covering: Dict[int, int],
) -> DeletionSet:
    """
    The deletion set of a minimal wood.

    The outgoing j-coloured edge of the last root goes first. Covering
    paths are then processed from the highest index down; each of the
    paths it covers first gives up one edge of its extension.

    Raises:
        CaseExhaustion: A covering path that tops a cycle has no deleted
            extension edge when it is processed
    """
    g = s.graph
    j = opp.j
    r_far = opp.paths[-1][0]
    deletions = DeletionSet()
    outer = s.out_dart(r_far, j) >> 1
    deletions.add(DeletionRecord(outer, Rule.OUTER_FACE, "-", opp.s, opp.s, 0))

    by_cover: Dict[int, List[int]] = {}
    for t, cover in covering.items():
        by_cover.setdefault(cover, []).append(t)

    for stage, c in enumerate(sorted(by_cover, reverse=True), start=1):
        rank_of = {e: k for k, e in enumerate(opp.covered_edges[c])}
        targets = sorted(
            by_cover[c],
            key=lambda t: min(rank_of[e] for e in extension_edges(g, opp, t) if e in rank_of),
        )
        rule = _case(g, opp, pmax, c, deletions)
        covered = set(rank_of)
        for rank, t in enumerate(targets):
            e, step = _pick(
                g, opp, c, t, rule, rank == 0, rank == len(targets) - 1, covered
            )
            if e in deletions:
                logger.debug(f"Edge {e} for P_{t} is already deleted")
                continue
            deletions.add(DeletionRecord(e, rule, step, c, t, stage))
        logger.debug(f"Processed covering path P_{c} under {rule.value}")
    logger.info(f"Selected {len(deletions)} deletions over {len(pmax)} index-maximal paths")
    return deletions


def faces_below(s: SchnyderWood, opp: OrderedPathPartition, c: int) -> List[int]:
    """Faces at v_k of P_c between its outgoing j and (j+1) edges, clockwise."""
    g = s.graph
    vk = opp.paths[c][-1]
    start = s.out_dart(vk, opp.j)
    stop = s.out_dart(vk, next_color(opp.j))
    faces = []
    d = start
    while d != stop:
        d = g.cw_next(d)
        faces.append(g.left_face(d))
    return faces


def deletion_certificates(
    s: SchnyderWood,
    opp: OrderedPathPartition,
    h: CandidateGraph,
    pmax: Set[int],
    deletions: DeletionSet,
) -> List[Certificate]:
    """Check a deletion set against the structure the selection relies on."""
    g = h.host
    removed = frozenset(deletions.edge_set())
    certs = []

    rest = h.to_networkx(removed)
    if nx.is_forest(rest):
        certs.append(passed(CertificateKind.FOREST, f"H - D has {rest.number_of_edges()} edges"))
    else:
        cycle = nx.find_cycle(rest)
        witness = sorted(k for _, _, k in cycle)
        certs.append(failed(CertificateKind.FOREST, witness, "H - D has a cycle"))

    full = h.to_networkx()
    cut_edges = {frozenset(b) for b in nx.bridges(nx.Graph(full))}
    bridges = []
    for e in deletions.edges:
        if e not in h:
            bridges.append(e)
            continue
        u, w = g.endpoints(e)
        # a parallel copy keeps e on a cycle
        if full.number_of_edges(u, w) == 1 and frozenset((u, w)) in cut_edges:
            bridges.append(e)
    if bridges:
        certs.append(failed(CertificateKind.NON_BRIDGE, bridges, "deleted edges on no cycle of H"))
    else:
        certs.append(passed(CertificateKind.NON_BRIDGE, "every deleted edge lies on a cycle of H"))

    counts = {i: sum(1 for e in extension_edges(g, opp, i) if e in removed) for i in pmax}
    off = sorted(i for i, k in counts.items() if k != 1)
    if off:
        certs.append(
            failed(
                CertificateKind.ONE_PER_EXTENSION,
                off,
                "paths with other than one deleted extension edge",
            )
        )
    else:
        certs.append(passed(CertificateKind.ONE_PER_EXTENSION, f"{len(pmax)} paths"))

    heavy = []
    for f in g.faces:
        deg = sum(1 for e in g.face_edges(f.id) if e < h.n_real and (e not in h or e in removed))
        if deg > MAX_FACE_DEGREE:
            heavy.append(f.id)
    if heavy:
        certs.append(failed(CertificateKind.FACE_DEGREE, heavy, "faces of dual degree above 4"))
    else:
        certs.append(passed(CertificateKind.FACE_DEGREE, "dual degrees at most 4"))

    closed_at: Dict[int, int] = {}
    for record in deletions.records:
        if record.rule is not Rule.OUTER_FACE:
            for f in faces_below(s, opp, record.covering):
                closed_at.setdefault(f, record.stage)
    late = []
    for record in deletions.records:
        d = 2 * record.edge
        for f in (g.left_face(d), g.right_face(d)):
            if f in closed_at and closed_at[f] < record.stage:
                late.append(record.edge)
                break
    if late:
        certs.append(
            failed(CertificateKind.NO_LATE_ADDITIONS, late, "edges added below a processed path")
        )
    else:
        certs.append(passed(CertificateKind.NO_LATE_ADDITIONS, "no face reopened"))
    return certs


@dataclass
class SelectionPass:
    """
    One deletion selection over a minimal wood.

    Attributes:
        wood: The minimal wood
        opp: Its compatible partition for the colours 2 and 3
        candidate: The candidate graph
        pmax: Indices of the index-maximal paths
        covering: Index-maximal path to its minimal covering path
        deletions: The selected deletion set
        certificates: Postcondition checks of the selection
    """

    wood: SchnyderWood
    opp: OrderedPathPartition
    candidate: CandidateGraph
    pmax: Set[int]
    covering: Dict[int, int]
    deletions: DeletionSet
    certificates: List[Certificate] = field(default_factory=list)


def select(
    s: SchnyderWood,
    n_real: int,
    check_minimal: bool = True,
    frame: Optional[CompletionFrame] = None,
) -> SelectionPass:
    """Run candidate graph, partition and deletion selection on one wood."""
    h = candidate(s, check_minimal, n_real, frame)
    opp = compatible_opp(s, 2)
    pmax = index_maximal_subpaths(h, opp)
    if opp.s not in pmax:
        raise PostconditionFailure(f"The last root path P_{opp.s} tops no cycle of H")
    covering = minimal_covering_paths(h.host, opp, pmax)
    deletions = select_deletions(s, opp, pmax, covering)
    certs = deletion_certificates(s, opp, h, pmax, deletions)
    return SelectionPass(s, opp, h, pmax, covering, deletions, certs)


@dataclass
class PipelineResult:
    """
    Every intermediate of a solve run.

    Attributes:
        suspension: The input
        seed_wood: The wood the minimization started from
        flip_stats: Minimization counters
        primal: Selection over the minimal wood of G
        dual_wood: The dual of the minimal wood
        dual: Selection over the dual wood
        pair: The assembled tree pair
    """

    suspension: Suspension
    seed_wood: SchnyderWood
    flip_stats: FlipStats
    primal: SelectionPass
    dual_wood: SchnyderWood
    dual: SelectionPass
    pair: TreePair

    @property
    def wood(self) -> SchnyderWood:
        return self.primal.wood


def _raise_failed(message: str, certs: List[Certificate]) -> None:
    if not all(c.passed for c in certs):
        raise PostconditionFailure(message, certs)


def run_pipeline(
    susp: Suspension, flip_cap_factor: int = 4, validate_every_flip: bool = True
) -> PipelineResult:
    """
    Seed wood, minimization, both selections and the assembled pair.

    Raises:
        PostconditionFailure: A selection or pair check failed; the failing
            certificates are attached
    """
    g = susp.base
    n_edges = g.n_edges
    frame = completion_frame(susp)
    seed = compute_wood(susp, frame)
    wood, stats = minimize_with_stats(seed, flip_cap_factor, validate_every_flip, frame)

    primal = select(wood, n_edges, check_minimal=True, frame=frame)
    _raise_failed("Primal deletion set failed its checks", primal.certificates)

    dwood = dual_wood(wood, frame.sdual)
    if not is_minimal(dwood):
        raise PostconditionFailure("The dual of the minimal wood is not minimal")
    dual_pass = select(dwood, n_edges, check_minimal=False)
    _raise_failed("Dual deletion set failed its checks", dual_pass.certificates)

    h = primal.candidate.edges
    h_dual = {e for e in dual_pass.candidate.edges if e < n_edges}
    complement = set(range(n_edges)) - h
    if h_dual != complement:
        cert = failed(
            CertificateKind.CO_TREE_DUALITY,
            sorted(h_dual ^ complement),
            "bidirected dual edges are not the duals of unidirected edges",
        )
        raise PostconditionFailure("Candidate graphs are not complementary", [cert])

    d = primal.deletions.edge_set()
    d_dual = dual_pass.deletions.edge_set()
    tree = (h - d) | {e for e in d_dual if e < n_edges}
    co_tree = (h_dual - d_dual) | d

    dualmap = dual(g)
    certs = verify_tree_pair(g, tree, co_tree, dualmap)
    outer_edge = primal.deletions.records[0].edge
    if all(c.passed for c in certs):
        certs.append(check_root_degrees(g, susp.roots, tree, co_tree, dualmap, outer_edge))
    certs = primal.certificates + dual_pass.certificates + certs
    _raise_failed("Tree pair failed its checks", certs)

    pair = TreePair(
        tree=tuple(sorted(tree)),
        co_tree=tuple(sorted(co_tree)),
        max_degree=max(degrees(g, tree)),
        co_max_degree=max(degrees(dualmap.dual_graph, co_tree)),
        certificates=tuple(certs),
        deletions=primal.deletions,
        dual_deletions=dual_pass.deletions,
        outer_edge=outer_edge,
    )
    logger.info(
        f"Tree pair on {g!r}: tree degree {pair.max_degree}, co-tree degree {pair.co_max_degree}"
    )
    return PipelineResult(susp, seed, stats, primal, dwood, dual_pass, pair)


def build_tree_pair(
    susp: Suspension, flip_cap_factor: int = 4, validate_every_flip: bool = True
) -> TreePair:
    """A spanning tree of maximum degree 4 whose co-tree has maximum degree 4."""
    return run_pipeline(susp, flip_cap_factor, validate_every_flip).pair
