"""
Base command interface for the fourtree command line.

Every subcommand implements ``execute``. The base class resolves the run
configuration, reads graph files and writes results, so the subclasses
only wire core calls to output.
"""

import argparse
import sys
from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple

from fourtree.config import RunConfig, load_config
from fourtree.core.plane_graph import Suspension, default_roots, suspend
from fourtree.utils.graph_io import GraphFile, read_graph
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


class Command(ABC):
    """
    Base command interface.

    All commands in the application must implement this interface.
    """

    def config(self, args: argparse.Namespace) -> RunConfig:
        """The configuration ``main`` attached to ``args``, or a freshly loaded one."""
        cfg = getattr(args, "run_config", None)
        if cfg is None:
            cfg = load_config(getattr(args, "config", None))
            args.run_config = cfg
        return cfg

    def read_graph(self, args: argparse.Namespace) -> Tuple[GraphFile, Tuple[int, int, int]]:
        """
        Read ``args.graph`` and pick its roots.

        ``--roots`` wins over a ``roots`` line in the file, which wins over
        the default choice.
        """
        parsed = read_graph(args.graph)
        roots: Optional[Sequence[int]] = getattr(args, "roots", None) or parsed.roots
        if roots is None:
            roots = default_roots(parsed.graph)
        logger.info(f"Loaded {parsed.graph!r} from {args.graph}, roots {tuple(roots)}")
        return parsed, tuple(roots)  # type: ignore[return-value]

    def suspension(self, args: argparse.Namespace) -> Suspension:
        parsed, roots = self.read_graph(args)
        check = self.config(args).connectivity.check
        return suspend(parsed.graph, roots, check=check)

    def emit(self, text: str, output: Optional[str] = None) -> None:
        """Write ``text`` to ``output`` or stdout."""
        if output:
            with open(output, "w") as f:
                f.write(text)
            logger.info(f"Wrote {output}")
        else:
            sys.stdout.write(text)

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> None:
        """
        Execute the command.

        Args:
            args: Command-line arguments

        Raises:
            FourTreeError: Mapped to an exit code by ``main``
        """
        pass
