"""
Command to check a user-supplied spanning tree against the degree bounds.
"""

import argparse

from fourtree.commands.base import Command
from fourtree.core.plane_graph import check_roots
from fourtree.core.verify import verify_tree_pair
from fourtree.domain.errors import BadParameters, VerificationFailed
from fourtree.utils.graph_io import parse_tree
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


class VerifyCommand(Command):
    """
    Print one ``PASS``/``FAIL`` line per certificate.

    The tree comes from ``--tree`` or ``--tree-file`` as ``u-v`` tokens.
    Root-degree checks run only with ``--check-roots``.
    """

    def execute(self, args: argparse.Namespace) -> None:
        parsed, roots = self.read_graph(args)
        g = parsed.graph
        if args.tree_file:
            with open(args.tree_file, "r") as f:
                text = f.read()
        elif args.tree is not None:
            text = args.tree
        else:
            raise BadParameters("verify needs --tree or --tree-file")
        tree = parse_tree(g, text)
        if len(set(tree)) != len(tree):
            raise BadParameters("The tree lists an edge twice")

        if args.check_roots:
            check_roots(g, roots)
        certs = verify_tree_pair(g, tree, roots=roots if args.check_roots else None)
        for cert in certs:
            print(cert.format_line())
        bad = [c for c in certs if not c.passed]
        if bad:
            raise VerificationFailed(f"{len(bad)} of {len(certs)} checks failed")
        logger.info(f"All {len(certs)} checks passed")
