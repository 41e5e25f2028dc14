"""
Result types shared by the pipeline, the validators and the commands.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple


class CertificateKind(str, Enum):
    """Kinds of checks reported by validators."""

    SPANNING_TREE = "spanning-tree"
    CO_TREE_DUALITY = "co-tree-duality"
    DEGREE_BOUND = "degree-bound"
    ROOT_DEGREES = "root-degrees"
    DUAL_DEGREE_LOWER_BOUND = "dual-degree-lower-bound"
    ORACLE = "oracle"
    FOREST = "forest"
    NON_BRIDGE = "non-bridge"
    ONE_PER_EXTENSION = "one-per-extension"
    FACE_DEGREE = "face-degree"
    NO_LATE_ADDITIONS = "no-late-additions"


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of one check.

    Attributes:
        kind: What was checked
        passed: Verdict
        witness: Offending edges or vertices; never empty on failure
        detail: Short description of the verdict
    """

    kind: CertificateKind
    passed: bool
    witness: Tuple[int, ...] = ()
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def format_line(self) -> str:
        line = f"{self.verdict} {self.kind.value}"
        if self.witness:
            line += " " + " ".join(str(x) for x in self.witness)
        return line

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "verdict": self.verdict}
        if self.witness:
            data["witness"] = list(self.witness)
        if self.detail:
            data["detail"] = self.detail
        return data

    def __str__(self) -> str:
        suffix = f" ({self.detail})" if self.detail else ""
        return self.format_line() + suffix


def passed(kind: CertificateKind, detail: str = "") -> Certificate:
    return Certificate(kind, True, (), detail)


def failed(kind: CertificateKind, witness, detail: str) -> Certificate:
    """A failing certificate; an empty witness is replaced by ``(-1,)``."""
    witness = tuple(witness) or (-1,)
    return Certificate(kind, False, witness, detail)


class Rule(str, Enum):
    """Which selection rule put an edge into a deletion set."""

    OUTER_FACE = "outer-face"
    CASE_1 = "case-1"
    CASE_2_1 = "case-2.1"
    CASE_2_2 = "case-2.2"


@dataclass(frozen=True)
class DeletionRecord:
    """
    Provenance of one deleted edge.

    Attributes:
        edge: Edge id in the host graph
        rule: Selection case
        step: Which alternative of the case applied ("a" covered path
            edge, "b" boundary special edge, "c" neighbour edge; "-" for
            the outer-face rule)
        covering: Index of the covering path being processed
        target: Index of the path whose extension receives the edge
        stage: Processing stage, 0 for the outer-face rule
    """

    edge: int
    rule: Rule
    step: str
    covering: int
    target: int
    stage: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edge": self.edge,
            "rule": self.rule.value,
            "step": self.step,
            "covering": self.covering,
            "target": self.target,
            "stage": self.stage,
        }


@dataclass
class DeletionSet:
    """Edges removed from a candidate graph, in selection order."""

    records: List[DeletionRecord] = field(default_factory=list)

    @property
    def edges(self) -> List[int]:
        return [r.edge for r in self.records]

    def edge_set(self) -> Set[int]:
        return {r.edge for r in self.records}

    def add(self, record: DeletionRecord) -> None:
        self.records.append(record)

    def __contains__(self, e: int) -> bool:
        return any(r.edge == e for r in self.records)

    def __len__(self) -> int:
        return len(self.records)

    def record_of(self, e: int) -> Optional[DeletionRecord]:
        return next((r for r in self.records if r.edge == e), None)


@dataclass(frozen=True)
class TreePair:
    """
    A spanning tree of G and its co-tree in G*, sharing edge ids.

    Attributes:
        tree: Primal edge ids of the tree
        co_tree: Dual edge ids of the co-tree (ids equal primal ids)
        max_degree: Maximum degree of the tree
        co_max_degree: Maximum degree of the co-tree
        certificates: Checks run before the pair was returned
        deletions: Primal deletion set D
        dual_deletions: Dual deletion set D'
        outer_edge: The single outer-face edge left out of the tree
    """

    tree: Tuple[int, ...]
    co_tree: Tuple[int, ...]
    max_degree: int
    co_max_degree: int
    certificates: Tuple[Certificate, ...] = ()
    deletions: Optional[DeletionSet] = None
    dual_deletions: Optional[DeletionSet] = None
    outer_edge: Optional[int] = None


@dataclass
class OracleResult:
    """
    Exhaustive search over the spanning trees of a graph.

    Attributes:
        optimum: Least max(tree degree, co-tree degree) over all trees
        witness: A tree attaining it
        dual_optimum: Least co-tree max degree over all trees
        tree_count: Number of spanning trees enumerated
        pairs_within_four: Trees with both max degrees at most 4
        has_three_three: Whether a tree with both max degrees at most 3 exists
        valid_pairs: Trees with both max degrees at most 4, or None when
            their number exceeded the keep limit
    """

    optimum: int
    witness: Tuple[int, ...]
    dual_optimum: int
    tree_count: int
    pairs_within_four: int
    has_three_three: bool
    valid_pairs: Optional[Set[FrozenSet[int]]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "optimum": self.optimum,
            "witness": list(self.witness),
            "dual_optimum": self.dual_optimum,
            "tree_count": self.tree_count,
            "pairs_within_four": self.pairs_within_four,
            "has_three_three": self.has_three_three,
        }
