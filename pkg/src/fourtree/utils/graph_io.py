"""
Text formats for embedded graphs, woods and tree edge lists.

Graph files::

    planar <n_vertices>
    outer <v0> <v1> ...          clockwise outer boundary
    roots <r1> <r2> <r3>         optional
    <v>: <u1> <u2> ...           clockwise neighbours, one line per vertex

Blank lines and ``#`` comments are ignored.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from fourtree.core.plane_graph import PlaneGraph, Suspension, build_plane_graph
from fourtree.core.schnyder import SchnyderWood, format_wood, parse_wood
from fourtree.domain.errors import ParseError
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GraphFile:
    """
    Contents of a graph file.

    Attributes:
        graph: The embedded graph
        roots: Roots from the ``roots`` line, if present
    """

    graph: PlaneGraph
    roots: Optional[Tuple[int, int, int]] = None


def _content(lines: Iterable[str]) -> List[Tuple[int, str]]:
    out = []
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(tokens: Sequence[str], no: Optional[int]) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def parse_graph(lines: Iterable[str]) -> GraphFile:
    """
    Parse the graph text format.

    Raises:
        ParseError: Malformed header or vertex lines
        GraphError: The rotation system is not a valid plane graph
    """
    rows = _content(lines)
    if not rows:
        raise ParseError("empty graph file")
    no, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "planar":
        raise ParseError(f"expected 'planar <n>', got {header!r}", no)
    n = _ints(parts[1:], no)[0]
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", no)

    outer: Optional[List[int]] = None
    roots: Optional[Tuple[int, int, int]] = None
    rotations: List[Optional[List[int]]] = [None] * n
    for no, line in rows[1:]:
        key, _, rest = line.partition(" ")
        if key == "outer":
            outer = _ints(rest.split(), no)
        elif key == "roots":
            values = _ints(rest.split(), no)
            if len(values) != 3:
                raise ParseError(f"expected three roots, got {len(values)}", no)
            roots = (values[0], values[1], values[2])
        elif ":" in line:
            head, _, tail = line.partition(":")
            v = _ints([head.strip()], no)[0]
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", no)
            if rotations[v] is not None:
                raise ParseError(f"vertex {v} listed twice", no)
            rotations[v] = _ints(tail.split(), no)
        else:
            raise ParseError(f"unrecognised line {line!r}", no)

    missing = [v for v, r in enumerate(rotations) if r is None]
    if missing:
        raise ParseError(f"no rotation given for vertices {missing[:10]}")
    graph = build_plane_graph([list(r) for r in rotations if r is not None], outer=outer)
    return GraphFile(graph, roots)


def format_graph(g: PlaneGraph, roots: Optional[Sequence[int]] = None) -> List[str]:
    lines = [f"planar {g.n_vertices}", "outer " + " ".join(str(v) for v in g.outer_boundary())]
    if roots is not None:
        lines.append("roots " + " ".join(str(r) for r in roots))
    for v in range(g.n_vertices):
        lines.append(f"{v}: " + " ".join(str(u) for u in g.neighbors(v)))
    return lines


def read_graph(path: str) -> GraphFile:
    logger.debug(f"Reading graph from {path}")
    with open(path, "r") as f:
        return parse_graph(f)


def write_graph(path: str, g: PlaneGraph, roots: Optional[Sequence[int]] = None) -> None:
    with open(path, "w") as f:
        f.write("\n".join(format_graph(g, roots)) + "\n")
    logger.info(f"Wrote {g!r} to {path}")


def read_wood(path: str, susp: Suspension) -> SchnyderWood:
    """Read a wood file; the wood is not validated."""
    with open(path, "r") as f:
        return parse_wood(susp, [line for _, line in _content(f)])


def write_wood(path: str, s: SchnyderWood) -> None:
    with open(path, "w") as f:
        f.write("\n".join(format_wood(s)) + "\n")
    logger.info(f"Wrote wood to {path}")


def parse_tree(g: PlaneGraph, text: str) -> List[int]:
    """
    Edge ids of a whitespace-separated ``u-v`` list.

    Raises:
        ParseError: A token is malformed or names a non-edge
    """
    edges = []
    for token in text.split():
        u, sep, w = token.partition("-")
        if not sep:
            raise ParseError(f"expected 'u-v', got {token!r}")
        a, b = _ints([u, w], None)
        if not (0 <= a < g.n_vertices and 0 <= b < g.n_vertices) or not g.has_edge(a, b):
            raise ParseError(f"{token} is not an edge of the graph")
        edges.append(g.edge_between(a, b))
    return edges


def format_edges(g: PlaneGraph, edges: Iterable[int]) -> str:
    """``u-v`` tokens, smaller endpoint first, sorted."""
    pairs = sorted(tuple(sorted(g.endpoints(e))) for e in edges)
    return " ".join(f"{u}-{w}" for u, w in pairs)
