"""
Command to generate graph files from the fixture families and corpora.
"""

import argparse
import os

from fourtree.commands.base import Command
from fourtree.config import make_spec
from fourtree.core.gen import corpus, generate
from fourtree.domain.errors import BadParameters
from fourtree.utils.graph_io import format_graph, write_graph
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


class GenerateCommand(Command):
    """
    Write one generated graph, or every instance of a corpus profile.

    Single graphs go to ``--output`` or stdout. A corpus needs
    ``--output-dir`` and gets one ``<name>.graph`` file per instance.
    """

    def execute(self, args: argparse.Namespace) -> None:
        if args.corpus:
            self._write_corpus(args)
            return
        if not args.family:
            raise BadParameters("generate needs --family or --corpus")
        spec = make_spec(family=args.family, k=args.k, n=args.n, name=args.name, seed=args.seed)
        instance = generate(spec)
        logger.info(f"Generated {instance.name}: {instance.graph!r}")
        text = "\n".join(format_graph(instance.graph, instance.roots)) + "\n"
        self.emit(text, args.output)

    def _write_corpus(self, args: argparse.Namespace) -> None:
        if not args.output_dir:
            raise BadParameters("generate --corpus needs --output-dir")
        os.makedirs(args.output_dir, exist_ok=True)
        for instance in corpus(args.corpus, self.config(args)):
            path = os.path.join(args.output_dir, f"{instance.name}.graph")
            write_graph(path, instance.graph, instance.roots)
            print(path)
