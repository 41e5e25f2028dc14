"""
Command to render a graph with its wood and tree pair.
"""

import argparse

from fourtree.commands.base import Command
from fourtree.core.cotree4 import run_pipeline
from fourtree.export import render_dot, render_svg
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


class ExportCommand(Command):
    """Write DOT or SVG; ``--no-solve`` draws the bare graph."""

    def execute(self, args: argparse.Namespace) -> None:
        cfg = self.config(args)
        wood = pair = None
        if args.no_solve:
            parsed, _ = self.read_graph(args)
            g = parsed.graph
        else:
            susp = self.suspension(args)
            g = susp.base
            result = run_pipeline(
                susp,
                flip_cap_factor=cfg.minimize.flip_cap_factor,
                validate_every_flip=cfg.minimize.validate_every_flip,
            )
            wood, pair = result.wood, result.pair

        if args.format == "dot":
            text = render_dot(g, wood, pair)
        else:
            text = render_svg(g, wood, pair)
        logger.info(f"Rendered {args.format} for {g!r}")
        self.emit(text, args.output)
