"""
Exception hierarchy for fourtree.

Every error raised by the core modules derives from FourTreeError so the
command-line front end can map failures to exit codes in one place.
"""

import math
from typing import Any, Iterable, List, Optional, Sequence


class FourTreeError(Exception):
    """Base class for all fourtree errors."""


class BadParameters(FourTreeError):
    """Raised when a generator or run configuration is out of range."""


class VerificationFailed(FourTreeError):
    """Raised when a user-supplied tree fails one or more certificates."""


class NotATree(FourTreeError):
    """Raised when an edge set expected to be a spanning tree is not one."""


class TooManyTrees(FourTreeError):
    """Raised when exhaustive enumeration would exceed the configured limit."""

    def __init__(self, log_count: float, limit: int):
        self.log_count = log_count
        self.limit = limit
        self.count = math.exp(log_count) if log_count < 700 else math.inf
        if self.count < 1e15:
            shown = f"{self.count:.0f}"
        else:
            shown = f"about 10^{log_count / math.log(10):.1f}"
        super().__init__(f"Instance has {shown} spanning trees, enumeration limit is {limit}")


# Graph construction and embedding


class GraphError(FourTreeError):
    """Base class for invalid plane graph input."""


class ParseError(GraphError):
    """Raised when a text file cannot be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class NonSimple(GraphError):
    """Loop or parallel edge in a graph that must be simple."""


class Disconnected(GraphError):
    """Graph is not connected."""


class NotGenusZero(GraphError):
    """Rotation system does not describe a plane embedding."""

    def __init__(self, n_vertices: int, n_edges: int, n_faces: int):
        self.n_vertices = n_vertices
        self.n_edges = n_edges
        self.n_faces = n_faces
        super().__init__(
            f"Euler check failed: V - E + F = {n_vertices} - {n_edges} + {n_faces}"
            f" = {n_vertices - n_edges + n_faces}, expected 2"
        )


class InconsistentRotation(GraphError):
    """An edge appears in only one endpoint's rotation, or twice in one."""


class RootsNotOnOuterFace(GraphError):
    """A root vertex is not on the outer face boundary."""


class RootsNotClockwise(GraphError):
    """Roots are not in clockwise order along the outer face."""


class NotInternally3Connected(GraphError):
    """Graph plus an apex joined to the roots is not 3-connected."""

    def __init__(self, roots: Sequence[int], separator: Optional[Sequence[int]] = None):
        self.roots = tuple(roots)
        self.separator = tuple(separator) if separator else None
        message = f"Graph is not internally 3-connected for roots {self.roots}"
        if self.separator:
            message += f" (separating set {list(self.separator)})"
        super().__init__(message)


# Schnyder woods


class WoodError(FourTreeError):
    """Base class for Schnyder wood failures."""


class InvalidWood(WoodError):
    """A labelling violates the wood conditions."""

    def __init__(self, message: str, violations: Optional[Iterable[Any]] = None):
        self.violations: List[Any] = list(violations or [])
        if self.violations:
            shown = "; ".join(str(v) for v in self.violations[:5])
            more = len(self.violations) - 5
            message = f"{message}: {shown}" + (f" (+{more} more)" if more > 0 else "")
        super().__init__(message)


class FlipDidNotConverge(WoodError):
    """Minimization exceeded its flip cap."""

    def __init__(self, flips: int, cap: int):
        self.flips = flips
        self.cap = cap
        super().__init__(f"Minimization did not converge after {flips} flips (cap {cap})")


class NotMinimalWood(WoodError):
    """A wood expected to be minimal has a clockwise directed cycle."""


# Ordered path partitions


class PartitionError(FourTreeError):
    """Base class for ordered path partition failures."""


class CycleInOrderGraph(PartitionError):
    """The path order graph is not acyclic."""


class MissingNeighbor(PartitionError):
    """A path has no left or right neighbour on the previous contour."""


# Deletion selection


class SelectionError(FourTreeError):
    """Base class for deletion selection failures."""


class NoCoveringPath(SelectionError):
    """No path covers an edge of an index-maximal path's extension."""


class CaseExhaustion(SelectionError):
    """No selection rule applied to a covered path."""


class PostconditionFailure(FourTreeError):
    """A pipeline invariant failed at runtime; carries the failing certificates."""

    def __init__(self, message: str, certificates: Optional[Iterable[Any]] = None):
        self.certificates: List[Any] = list(certificates or [])
        failed = [c for c in self.certificates if not getattr(c, "passed", True)]
        if failed:
            message += ": " + ", ".join(str(c) for c in failed)
        super().__init__(message)
