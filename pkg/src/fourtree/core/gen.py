"""
Fixture generators and corpora.

Named families are drawn with straight-line coordinates and the clockwise
rotations are read off the drawing. Random triangulations grow by
inserting a vertex into a face chosen with a seeded generator, so they
are maximal planar and 3-connected by construction.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from fourtree.config.models import GeneratorSpec, RunConfig, make_spec
from fourtree.core.plane_graph import (
    PlaneGraph,
    as_simple,
    build_plane_graph,
    default_roots,
    dual,
)
from fourtree.domain.errors import BadParameters
from fourtree.utils.constants import SAMPLE10_GRAPH_PATH
from fourtree.utils.graph_io import read_graph
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)

Point = Tuple[float, float]

PROFILES = ("small", "medium", "bench", "negative")


@dataclass
class Instance:
    """
    A generated graph with its roots.

    Attributes:
        name: Label used in corpus listings and file names
        graph: The embedded graph
        roots: Default roots for the family
        positions: Straight-line coordinates, when the family has a drawing
    """

    name: str
    graph: PlaneGraph
    roots: Tuple[int, int, int]
    positions: Optional[Dict[int, Point]] = field(default=None, repr=False)


def _polar(radius: float, angle: float) -> Point:
    return radius * math.cos(angle), radius * math.sin(angle)


def _clockwise(k: int, radius: float, offset: float = 0.0) -> List[Point]:
    """``k`` points on a circle, clockwise from the top."""
    return [_polar(radius, math.pi / 2 - 2 * math.pi * (i + offset) / k) for i in range(k)]


def from_drawing(
    positions: Sequence[Point], edges: Sequence[Tuple[int, int]], outer: Sequence[int]
) -> PlaneGraph:
    """
    Embed a straight-line drawing.

    Neighbours are sorted clockwise by angle, which is decreasing
    ``atan2``; ``outer`` lists the outer boundary clockwise.
    """
    pts = np.asarray(positions, dtype=float)
    nbrs: List[List[int]] = [[] for _ in range(len(pts))]
    for u, w in edges:
        nbrs[u].append(w)
        nbrs[w].append(u)
    lists = []
    for v, around in enumerate(nbrs):
        vec = pts[around] - pts[v]
        angles = np.arctan2(vec[:, 1], vec[:, 0])
        lists.append([around[i] for i in np.argsort(-angles, kind="stable")])
    return build_plane_graph(lists, outer=list(outer))


def _instance(name: str, g: PlaneGraph, positions=None) -> Instance:
    pos = None if positions is None else {v: tuple(p) for v, p in enumerate(positions)}
    return Instance(name, g, default_roots(g), pos)


def wheel(k: int) -> Instance:
    """Hub 0 and rim 1..k clockwise."""
    graph = nx.wheel_graph(k + 1)
    positions = [(0.0, 0.0)] + _clockwise(k, 1.0)
    g = from_drawing(positions, list(graph.edges), list(range(1, k + 1)))
    return _instance(f"wheel-{k}", g, positions)


def prism(k: int) -> Instance:
    """Outer k-cycle 0..k-1, inner k-cycle k..2k-1, spokes i to k+i."""
    graph = nx.circular_ladder_graph(k)
    positions = _clockwise(k, 2.0) + _clockwise(k, 1.0)
    g = from_drawing(positions, list(graph.edges), list(range(k)))
    return _instance(f"prism-{k}", g, positions)


def antiprism(k: int) -> Instance:
    """Two k-cycles rotated half a step, each outer vertex joined to two inner ones."""
    graph = nx.circular_ladder_graph(k)
    graph.add_edges_from((i, k + (i - 1) % k) for i in range(k))
    positions = _clockwise(k, 2.0) + _clockwise(k, 0.6, offset=0.5)
    g = from_drawing(positions, list(graph.edges), list(range(k)))
    return _instance(f"antiprism-{k}", g, positions)


def icosahedron() -> Instance:
    """Outer triangle 0-2, hexagon 3-8, inner triangle 9-11."""
    outer = _clockwise(3, 5.0)
    hexagon = _clockwise(6, 2.0)
    inner = _clockwise(3, 0.6, offset=0.5)
    edges = [(0, 1), (1, 2), (2, 0), (9, 10), (10, 11), (11, 9)]
    edges += [(3 + t, 3 + (t + 1) % 6) for t in range(6)]
    for i in range(3):
        # outer vertex i faces hexagon vertex 2i, inner vertex 9+i faces 2i+1
        edges += [(i, 3 + (2 * i + t) % 6) for t in (-1, 0, 1)]
        edges += [(9 + i, 3 + (2 * i + 1 + t) % 6) for t in (-1, 0, 1)]
    positions = outer + hexagon + inner
    g = from_drawing(positions, edges, [0, 1, 2])
    return _instance("icosahedron", g, positions)


def dodecahedron() -> Instance:
    g = as_simple(dual(icosahedron().graph).dual_graph)
    return _instance("dodecahedron", g)


def platonic(name: str) -> Instance:
    if name == "tetrahedron":
        inst = wheel(3)
    elif name == "cube":
        inst = prism(4)
    elif name == "octahedron":
        inst = antiprism(3)
    elif name == "icosahedron":
        return icosahedron()
    elif name == "dodecahedron":
        return dodecahedron()
    else:
        raise BadParameters(f"Unknown platonic solid {name!r}")
    inst.name = name
    return inst


def crown(k: int) -> Instance:
    """
    The k-cycle w_1..w_k (ids 0..k-1) with p_i (id k+i-1) joined to w_i and w_{i+1}.

    The p_i sit on the outer face; the dual's simple support is K_{2,k}.
    """
    positions = _clockwise(k, 1.0) + _clockwise(k, 2.0, offset=0.5)
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, i) for i in range(k)] + [(k + i, (i + 1) % k) for i in range(k)]
    outer = [v for i in range(k) for v in (i, k + i)]
    g = from_drawing(positions, edges, outer)
    return _instance(f"crown-{k}", g, positions)


def sample10() -> Instance:
    """The stored ten-vertex example with its own roots."""
    parsed = read_graph(SAMPLE10_GRAPH_PATH)
    return Instance("sample10", parsed.graph, parsed.roots or default_roots(parsed.graph))


def random_triangulation(n: int, seed: int = 0) -> Instance:
    """
    Stacked triangulation on ``n`` vertices.

    Starts from the triangle 0, 1, 2 (outer boundary clockwise 0, 2, 1) and
    inserts each new vertex into a uniformly chosen inner face.
    """
    if n < 4:
        raise BadParameters(f"A random triangulation needs n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    rot: List[List[int]] = [[1, 2], [2, 0], [0, 1]]
    faces: List[Tuple[int, int, int]] = [(0, 1, 2)]  # counterclockwise inner faces

    def insert_after(v: int, anchor: int, new: int) -> None:
        around = rot[v]
        around.insert(around.index(anchor) + 1, new)

    for v in range(3, n):
        i = int(rng.integers(len(faces)))
        a, b, c = faces[i]
        insert_after(a, c, v)
        insert_after(b, a, v)
        insert_after(c, b, v)
        rot.append([a, c, b])
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
    g = build_plane_graph(rot, outer=[0, 2, 1])
    logger.debug(f"Random triangulation n={n} seed={seed}: {g!r}")
    return _instance(f"random-{n}-s{seed}", g)


def generate(spec: GeneratorSpec) -> Instance:
    """
    Build the instance a spec describes.

    Raises:
        BadParameters: Parameters out of range
    """
    if spec.family == "wheel":
        return wheel(spec.k)
    if spec.family == "prism":
        return prism(spec.k)
    if spec.family == "antiprism":
        return antiprism(spec.k)
    if spec.family == "platonic":
        return platonic(spec.name)
    if spec.family == "sample10":
        return sample10()
    if spec.family == "crown":
        return crown(spec.k)
    if spec.family == "random":
        return random_triangulation(spec.n, spec.seed)
    raise BadParameters(f"Unknown family {spec.family!r}")


def corpus(profile: str, config: Optional[RunConfig] = None) -> List[Instance]:
    """
    Instances of a named profile.

    ``small`` holds the named fixtures and oracle-sized triangulations,
    ``medium`` triangulations up to 500 vertices, ``bench`` one
    triangulation per scheduled size, and ``negative`` the crowns, which
    fail the connectivity test for every root triple. Seeds count up from
    the configured seed.
    """
    config = config or RunConfig()
    settings = config.corpus
    if profile == "small":
        specs = [
            make_spec(family="platonic", name=name)
            for name in ("tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron")
        ]
        specs.append(make_spec(family="sample10"))
        specs += [make_spec(family="wheel", k=k) for k in range(4, 9)]
        specs += [make_spec(family="prism", k=k) for k in (3, 5)]
        specs += [make_spec(family="antiprism", k=k) for k in (4, 5)]
        specs += [
            make_spec(family="random", n=n, seed=settings.seed + i)
            for i, n in enumerate(settings.small_triangulations)
        ]
    elif profile == "medium":
        specs = [
            make_spec(family="random", n=n, seed=settings.seed + i * settings.medium_per_size + r)
            for i, n in enumerate(settings.medium_sizes)
            for r in range(settings.medium_per_size)
        ]
    elif profile == "bench":
        specs = [
            make_spec(family="random", n=n, seed=config.bench.seed + i)
            for i, n in enumerate(config.bench.schedule)
        ]
    elif profile == "negative":
        specs = [make_spec(family="crown", k=k) for k in range(4, 8)]
    else:
        raise BadParameters(f"Unknown corpus profile {profile!r}; expected one of {PROFILES}")
    instances = [generate(spec) for spec in specs]
    logger.info(f"Corpus {profile}: {len(instances)} instances")
    return instances
