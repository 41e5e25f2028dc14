"""
Validators and brute-force oracles for tree / co-tree pairs.

Nothing here trusts the pipeline: every check works from the embedding and
the edge sets alone.
"""

import math
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from fourtree.core.plane_graph import DualMap, PlaneGraph, dual
from fourtree.domain.entities import (
    Certificate,
    CertificateKind,
    OracleResult,
    TreePair,
    failed,
    passed,
)
from fourtree.domain.errors import NotATree, TooManyTrees
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)

MAX_DEGREE = 4


class _UnionFind:
    """Union-find with an undo log."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.log: List[Tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.log.append((a, b))
        return True

    def undo(self) -> None:
        a, b = self.log.pop()
        self.parent[b] = b
        self.size[a] -= self.size[b]


def _tree_path(adj: Dict[int, List[Tuple[int, int]]], u: int, w: int) -> List[int]:
    """Edge ids of the path from u to w in a forest given by adjacency."""
    prev: Dict[int, Tuple[int, int]] = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y, e in adj.get(x, []):
            if y not in prev:
                prev[y] = (x, e)
                queue.append(y)
    path = []
    x = w
    while x != u:
        x, e = prev[x]
        path.append(e)
    return path


def is_spanning_tree(
    g: PlaneGraph, edges: Iterable[int], kind: CertificateKind = CertificateKind.SPANNING_TREE
) -> Certificate:
    """
    Check that ``edges`` form a spanning tree of ``g``.

    Failure witnesses: unknown edge ids, the edges of a cycle, or the
    vertices missed by the tree.
    """
    edges = sorted(set(edges))
    unknown = [e for e in edges if not 0 <= e < g.n_edges]
    if unknown:
        return failed(kind, unknown, "edge ids not in the graph")
    uf = _UnionFind(g.n_vertices)
    adj: Dict[int, List[Tuple[int, int]]] = {}
    for e in edges:
        u, w = g.endpoints(e)
        if not uf.union(u, w):
            cycle = [e] + _tree_path(adj, u, w)
            return failed(kind, sorted(cycle), "edges contain a cycle")
        adj.setdefault(u, []).append((w, e))
        adj.setdefault(w, []).append((u, e))
    if len(edges) != g.n_vertices - 1:
        root = uf.find(0)
        missed = [v for v in range(g.n_vertices) if uf.find(v) != root]
        return failed(
            kind, missed, f"{len(edges)} edges for {g.n_vertices} vertices"
        )
    return passed(kind, f"{len(edges)} edges span {g.n_vertices} vertices")


def degrees(g: PlaneGraph, edges: Iterable[int]) -> List[int]:
    deg = [0] * g.n_vertices
    for e in edges:
        u, w = g.endpoints(e)
        deg[u] += 1
        deg[w] += 1
    return deg


def check_degree_bound(
    g: PlaneGraph, edges: Iterable[int], bound: int = MAX_DEGREE, side: str = "tree"
) -> Certificate:
    deg = degrees(g, edges)
    over = [v for v, d in enumerate(deg) if d > bound]
    if over:
        return failed(
            CertificateKind.DEGREE_BOUND, over, f"{side} degree above {bound}"
        )
    return passed(CertificateKind.DEGREE_BOUND, f"{side} max degree {max(deg)}")


def co_tree_of(g: PlaneGraph, dualmap: DualMap, tree_edges: Iterable[int]) -> Set[int]:
    """
    Dual edges of the primal edges outside the tree.

    Raises:
        NotATree: The input or the result is not a spanning tree
    """
    tree = set(tree_edges)
    cert = is_spanning_tree(g, tree)
    if not cert.passed:
        raise NotATree(f"Not a spanning tree of G: {cert}")
    co = {dualmap.dual_edge(e) for e in range(g.n_edges) if e not in tree}
    cert = is_spanning_tree(dualmap.dual_graph, co)
    if not cert.passed:
        raise NotATree(f"Complement is not a spanning tree of G*: {cert}")
    return co


def _is_cycle(g: PlaneGraph, edges: Sequence[int]) -> bool:
    if not edges:
        return False
    graph = nx.MultiGraph()
    for e in edges:
        u, w = g.endpoints(e)
        graph.add_edge(u, w, key=e)
    return nx.is_connected(graph) and all(d == 2 for _, d in graph.degree())


def _is_bond(g: PlaneGraph, edges: Sequence[int]) -> bool:
    """Removing ``edges`` splits the connected graph into two parts joined only by them."""
    if not edges:
        return False
    cut = set(edges)
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.n_vertices))
    for e in range(g.n_edges):
        if e not in cut:
            u, w = g.endpoints(e)
            graph.add_edge(u, w, key=e)
    parts = list(nx.connected_components(graph))
    if len(parts) != 2:
        return False
    side = {v: i for i, part in enumerate(parts) for v in part}
    return all(side[g.endpoints(e)[0]] != side[g.endpoints(e)[1]] for e in cut)


def check_cut_cycle(g: PlaneGraph, dualmap: DualMap, edge_set: Iterable[int]) -> Certificate:
    """An edge set is a cycle of G exactly when its duals form a minimal cut of G*."""
    edges = sorted(set(edge_set))
    cycle = _is_cycle(g, edges)
    bond = _is_bond(dualmap.dual_graph, [dualmap.dual_edge(e) for e in edges])
    if cycle != bond:
        return failed(
            CertificateKind.CO_TREE_DUALITY,
            edges,
            f"cycle={cycle} but minimal cut={bond}",
        )
    return passed(CertificateKind.CO_TREE_DUALITY, f"cycle={cycle}, minimal cut={bond}")


def outer_face_edge(g: PlaneGraph, r1: int) -> int:
    """Edge from r1 to the next vertex on the clockwise outer walk."""
    walk = g.outer_boundary()
    k = walk.index(r1)
    return g.edge_between(r1, walk[(k + 1) % len(walk)])


def check_root_degrees(
    g: PlaneGraph,
    roots: Sequence[int],
    tree: Iterable[int],
    co_tree: Iterable[int],
    dualmap: Optional[DualMap] = None,
    outer_edge: Optional[int] = None,
) -> Certificate:
    """
    Degree pattern at the roots of a pipeline tree.

    r1 is a leaf, every outer edge but the one leaving r1 clockwise is in
    the tree, r3 has degree 2, r2 at most 3, and the outer-face vertex of
    the dual is a leaf of the co-tree.
    """
    kind = CertificateKind.ROOT_DEGREES
    dualmap = dualmap or dual(g)
    tree = set(tree)
    r1, r2, r3 = roots
    skip = outer_face_edge(g, r1) if outer_edge is None else outer_edge
    deg = degrees(g, tree)
    if deg[r1] != 1:
        return failed(kind, [r1], f"r1 has degree {deg[r1]}")
    missing = [e for e in g.face_edges(g.outer_face_id) if e != skip and e not in tree]
    if missing:
        return failed(kind, missing, "outer edges missing from the tree")
    if deg[r3] != 2:
        return failed(kind, [r3], f"r3 has degree {deg[r3]}")
    if deg[r2] > 3:
        return failed(kind, [r2], f"r2 has degree {deg[r2]}")
    outer = dualmap.face_vertex[g.outer_face_id]
    co_deg = degrees(dualmap.dual_graph, co_tree)
    if co_deg[outer] != 1:
        return failed(kind, [outer], f"outer face vertex has co-tree degree {co_deg[outer]}")
    return passed(kind, f"deg r1=1 r2={deg[r2]} r3=2")


_LOG_FLOAT_MAX = float(np.log(np.finfo(float).max))


def log_spanning_tree_count(g: PlaneGraph) -> float:
    """Natural log of the Kirchhoff count; ``-inf`` for a disconnected graph."""
    n = g.n_vertices
    if n == 1:
        return 0.0
    lap = np.zeros((n, n))
    for e in range(g.n_edges):
        u, w = g.endpoints(e)
        if u == w:
            continue
        lap[u, u] += 1
        lap[w, w] += 1
        lap[u, w] -= 1
        lap[w, u] -= 1
    sign, logdet = np.linalg.slogdet(lap[1:, 1:])
    if sign <= 0:
        return -math.inf
    return float(logdet)


def count_spanning_trees(g: PlaneGraph) -> int:
    """
    Kirchhoff count of spanning trees (parallel edges counted separately).

    Exact while the count fits a double; beyond that the result keeps 53
    significant bits.
    """
    log_count = log_spanning_tree_count(g)
    if log_count == -math.inf:
        return 0
    if log_count < _LOG_FLOAT_MAX:
        return int(round(math.exp(log_count)))
    shift = int(log_count / math.log(2)) - 52
    return int(round(math.exp(log_count - shift * math.log(2)))) << shift


def _enumerate_trees(g: PlaneGraph):
    """
    Yield every spanning tree as a sorted edge tuple.

    Include/exclude search over edges in id order with an explicit stack.
    Excluding an edge is only tried while the undecided edges can still
    reconnect the current components.
    """
    n, m = g.n_vertices, g.n_edges
    ends = [g.endpoints(e) for e in range(m)]
    uf = _UnionFind(n)
    chosen: List[int] = []

    def reconnectable(start: int) -> bool:
        roots = {uf.find(v) for v in range(n)}
        if len(roots) == 1:
            return True
        link = _UnionFind(n)
        count = len(roots)
        for e in range(start, m):
            a, b = uf.find(ends[e][0]), uf.find(ends[e][1])
            if a != b and link.union(a, b):
                count -= 1
                if count == 1:
                    return True
        return False

    # frame: [edge, action, entered by including edge - 1]; action 0 include, 1 exclude, 2 pop
    stack = [[0, 0, 0]]
    while stack:
        frame = stack[-1]
        e, action, included = frame
        if action == 0 and len(chosen) == n - 1:
            yield tuple(chosen)
            frame[1] = 2
            continue
        if action == 0:
            frame[1] = 1
            if e < m and uf.union(*ends[e]):
                chosen.append(e)
                stack.append([e + 1, 0, 1])
            continue
        if action == 1:
            frame[1] = 2
            if e < m and reconnectable(e + 1):
                stack.append([e + 1, 0, 0])
            continue
        stack.pop()
        if included:
            chosen.pop()
            uf.undo()


def oracle_best_pair(
    g: PlaneGraph,
    dualmap: Optional[DualMap] = None,
    tree_limit: int = 10_000_000,
    keep_valid_pairs_limit: int = 200_000,
) -> OracleResult:
    """
    Exhaustive optimum of max(tree degree, co-tree degree).

    Raises:
        TooManyTrees: ``g`` has more spanning trees than ``tree_limit``
    """
    log_count = log_spanning_tree_count(g)
    if tree_limit < 1 or log_count > math.log(tree_limit) + 1e-9:
        raise TooManyTrees(log_count, tree_limit)
    count = count_spanning_trees(g)
    if count > tree_limit:
        raise TooManyTrees(math.log(count), tree_limit)
    dualmap = dualmap or dual(g)
    dg = dualmap.dual_graph
    primal_ends = [g.endpoints(e) for e in range(g.n_edges)]
    dual_ends = [dg.endpoints(dualmap.dual_edge(e)) for e in range(g.n_edges)]

    best = None
    witness: Tuple[int, ...] = ()
    dual_best = None
    total = 0
    within_four = 0
    three_three = False
    valid: Optional[Set[frozenset]] = set()

    for tree in _enumerate_trees(g):
        total += 1
        in_tree = set(tree)
        deg = [0] * g.n_vertices
        co_deg = [0] * dg.n_vertices
        for e in range(g.n_edges):
            if e in in_tree:
                u, w = primal_ends[e]
                deg[u] += 1
                deg[w] += 1
            else:
                u, w = dual_ends[e]
                co_deg[u] += 1
                co_deg[w] += 1
        a, b = max(deg), max(co_deg)
        value = max(a, b)
        if best is None or value < best:
            best, witness = value, tree
        if dual_best is None or b < dual_best:
            dual_best = b
        if value <= MAX_DEGREE:
            within_four += 1
            if valid is not None:
                valid.add(frozenset(tree))
                if len(valid) > keep_valid_pairs_limit:
                    valid = None
        if value <= 3:
            three_three = True

    logger.info(
        f"Enumerated {total} spanning trees: optimum {best}, dual optimum {dual_best}"
    )
    return OracleResult(
        optimum=best if best is not None else 0,
        witness=witness,
        dual_optimum=dual_best if dual_best is not None else 0,
        tree_count=total,
        pairs_within_four=within_four,
        has_three_three=three_three,
        valid_pairs=valid,
    )


def check_dual_degree_lower_bound(
    g: PlaneGraph, bound: int, dualmap: Optional[DualMap] = None, tree_limit: int = 10_000_000
) -> Certificate:
    """Every co-tree of ``g`` has maximum degree at least ``bound``."""
    result = oracle_best_pair(g, dualmap, tree_limit=tree_limit, keep_valid_pairs_limit=0)
    kind = CertificateKind.DUAL_DEGREE_LOWER_BOUND
    if result.dual_optimum < bound:
        return failed(kind, result.witness, f"co-tree of degree {result.dual_optimum} < {bound}")
    return passed(kind, f"dual optimum {result.dual_optimum} >= {bound}")


def verify_tree_pair(
    g: PlaneGraph,
    tree: Iterable[int],
    co_tree: Optional[Iterable[int]] = None,
    dualmap: Optional[DualMap] = None,
    roots: Optional[Sequence[int]] = None,
) -> List[Certificate]:
    """
    All checks for a tree of ``g``, with its co-tree recomputed when not given.

    Root degrees are only checked when ``roots`` are supplied.
    """
    dualmap = dualmap or dual(g)
    tree = set(tree)
    certs = [is_spanning_tree(g, tree)]
    expected = {dualmap.dual_edge(e) for e in range(g.n_edges) if e not in tree}
    co = expected if co_tree is None else set(co_tree)
    if co != expected:
        certs.append(
            failed(
                CertificateKind.CO_TREE_DUALITY,
                sorted(co ^ expected),
                "co-tree differs from the dual complement of the tree",
            )
        )
    else:
        certs.append(passed(CertificateKind.CO_TREE_DUALITY, "co-tree is the dual complement"))
    certs.append(is_spanning_tree(dualmap.dual_graph, co))
    certs.append(check_degree_bound(g, tree, side="tree"))
    certs.append(check_degree_bound(dualmap.dual_graph, co, side="co-tree"))
    if roots is not None and all(c.passed for c in certs):
        certs.append(check_root_degrees(g, roots, tree, co, dualmap))
    return certs


def pair_certificates(pair: TreePair, g: PlaneGraph, roots: Sequence[int]) -> List[Certificate]:
    """Re-verify a pipeline result from scratch."""
    dualmap = dual(g)
    certs = verify_tree_pair(g, pair.tree, pair.co_tree, dualmap)
    if all(c.passed for c in certs):
        certs.append(
            check_root_degrees(g, roots, pair.tree, pair.co_tree, dualmap, pair.outer_edge)
        )
    return certs
