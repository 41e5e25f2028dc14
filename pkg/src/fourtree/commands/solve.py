"""
Command to build the degree-four tree pair of a graph file.

The output is YAML with a ``tree`` block, a ``cotree`` block and a
``certificate`` block. Co-tree edges are named by the primal edge they
cross. Nothing run-dependent (times, paths) is printed, so identical
inputs give identical output.
"""

import argparse
from typing import Any, Dict

from fourtree.commands.base import Command
from fourtree.core.cotree4 import PipelineResult, run_pipeline
from fourtree.core.opp import format_opp
from fourtree.utils.graph_io import format_edges, write_wood
from fourtree.utils.logging import get_logger
from fourtree.utils.yaml_handler import dumps_yaml

logger = get_logger(__name__)


def result_document(result: PipelineResult, dump_opp: bool = False) -> Dict[str, Any]:
    """The YAML document ``solve`` prints for a pipeline result."""
    g = result.suspension.base
    pair = result.pair
    certificate: Dict[str, Any] = {
        "roots": list(result.suspension.roots),
        "max_degree": pair.max_degree,
        "co_max_degree": pair.co_max_degree,
        "outer_edge": format_edges(g, [pair.outer_edge]) if pair.outer_edge is not None else None,
        "flips": result.flip_stats.flips,
        "deletions": [r.to_dict() for r in pair.deletions.records] if pair.deletions else [],
        "dual_deletions": (
            [r.to_dict() for r in pair.dual_deletions.records] if pair.dual_deletions else []
        ),
        "checks": [c.to_dict() for c in pair.certificates],
    }
    doc: Dict[str, Any] = {
        "tree": format_edges(g, pair.tree),
        "cotree": format_edges(g, pair.co_tree),
        "certificate": certificate,
    }
    if dump_opp:
        doc["opp"] = {
            "primal": format_opp(result.primal.opp),
            "dual": format_opp(result.dual.opp),
        }
    return doc


class SolveCommand(Command):
    """Run the full pipeline on one graph and print the pair with its certificate."""

    def execute(self, args: argparse.Namespace) -> None:
        cfg = self.config(args)
        susp = self.suspension(args)
        result = run_pipeline(
            susp,
            flip_cap_factor=cfg.minimize.flip_cap_factor,
            validate_every_flip=cfg.minimize.validate_every_flip,
        )
        if args.dump_wood:
            write_wood(args.dump_wood, result.wood)
        self.emit(dumps_yaml(result_document(result, args.dump_opp)), args.output)
