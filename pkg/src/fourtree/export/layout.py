"""
Straight-line coordinates for drawing plane graphs.
"""

import math
from typing import Dict, Tuple

import numpy as np

from fourtree.core.plane_graph import PlaneGraph

Point = Tuple[float, float]


def tutte_layout(g: PlaneGraph, radius: float = 1.0) -> Dict[int, Point]:
    """
    Barycentric embedding with the outer face pinned to a convex polygon.

    Outer vertices go clockwise around a circle; every other vertex sits at
    the mean of its neighbours. For 3-connected graphs the drawing is planar.
    """
    outer = []
    for v in g.outer_boundary():
        if v not in outer:
            outer.append(v)
    pinned = {
        v: (radius * math.cos(math.pi / 2 - 2 * math.pi * i / len(outer)),
            radius * math.sin(math.pi / 2 - 2 * math.pi * i / len(outer)))
        for i, v in enumerate(outer)
    }
    free = [v for v in range(g.n_vertices) if v not in pinned]
    pos: Dict[int, Point] = dict(pinned)
    if not free:
        return pos

    index = {v: i for i, v in enumerate(free)}
    laplacian = np.zeros((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for v in free:
        i = index[v]
        for u in g.neighbors(v):
            laplacian[i, i] += 1.0
            if u in index:
                laplacian[i, index[u]] -= 1.0
            else:
                rhs[i] += pinned[u]
    solved = np.linalg.solve(laplacian, rhs)
    for v in free:
        x, y = solved[index[v]]
        pos[v] = (float(x), float(y))
    return pos


def face_points(g: PlaneGraph, pos: Dict[int, Point]) -> Dict[int, Point]:
    """Centroid of every inner face's boundary vertices."""
    points = {}
    for f in g.faces:
        if f.id == g.outer_face_id:
            continue
        xy = np.array([pos[v] for v in g.face_vertices(f.id)])
        cx, cy = xy.mean(axis=0)
        points[f.id] = (float(cx), float(cy))
    return points


def dual_edge_route(
    g: PlaneGraph, pos: Dict[int, Point], faces: Dict[int, Point], e: int, push: float = 1.25
) -> Tuple[Point, Point, Point]:
    """
    Polyline for the dual of edge ``e`` through the midpoint of ``e``.

    An outer-face end is drawn just beyond the edge, pushed away from the
    origin.
    """
    u, w = g.endpoints(e)
    mid = ((pos[u][0] + pos[w][0]) / 2, (pos[u][1] + pos[w][1]) / 2)
    ends = []
    for f in (g.left_face(2 * e), g.right_face(2 * e)):
        if f in faces:
            ends.append(faces[f])
        else:
            ends.append((mid[0] * push, mid[1] * push))
    return ends[0], mid, ends[1]
