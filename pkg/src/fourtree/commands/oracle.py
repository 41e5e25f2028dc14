"""
Command to compare the pipeline against exhaustive enumeration.
"""

import argparse
from typing import Any, Dict

from fourtree.commands.base import Command
from fourtree.core.cotree4 import build_tree_pair
from fourtree.core.plane_graph import suspend
from fourtree.core.verify import oracle_best_pair
from fourtree.domain.errors import GraphError
from fourtree.utils.graph_io import format_edges
from fourtree.utils.logging import get_logger
from fourtree.utils.yaml_handler import dumps_yaml

logger = get_logger(__name__)


class OracleCommand(Command):
    """
    Enumerate every spanning tree and report the best achievable degrees.

    When the graph is internally 3-connected for its roots the pipeline
    also runs, and the report says whether its pair is one of the valid
    pairs the enumeration found.
    """

    def execute(self, args: argparse.Namespace) -> None:
        cfg = self.config(args)
        parsed, roots = self.read_graph(args)
        g = parsed.graph
        limit = args.limit or cfg.oracle.tree_limit
        result = oracle_best_pair(
            g, tree_limit=limit, keep_valid_pairs_limit=cfg.oracle.keep_valid_pairs_limit
        )
        report: Dict[str, Any] = result.to_dict()
        report["witness"] = format_edges(g, result.witness)

        try:
            susp = suspend(g, roots, check=True)
        except GraphError as e:
            logger.warning(f"Skipping the pipeline: {e}")
            report["pipeline"] = None
        else:
            pair = build_tree_pair(
                susp,
                flip_cap_factor=cfg.minimize.flip_cap_factor,
                validate_every_flip=cfg.minimize.validate_every_flip,
            )
            among = None
            if result.valid_pairs is not None:
                among = frozenset(pair.tree) in result.valid_pairs
            report["pipeline"] = {
                "tree": format_edges(g, pair.tree),
                "max_degree": pair.max_degree,
                "co_max_degree": pair.co_max_degree,
                "among_valid_pairs": among,
            }
        print(dumps_yaml(report), end="")
