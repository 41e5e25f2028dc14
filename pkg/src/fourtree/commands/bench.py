"""
Command to time the pipeline over a corpus and fit its scaling exponent.
"""

import argparse
import time
from typing import List, Tuple

import numpy as np

from fourtree.commands.base import Command
from fourtree.core.cotree4 import run_pipeline
from fourtree.core.gen import corpus
from fourtree.core.plane_graph import suspend
from fourtree.domain.errors import BadParameters, VerificationFailed
from fourtree.utils.logging import get_logger

logger = get_logger(__name__)


def fit_exponent(rows: List[Tuple[int, float]]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    sizes = np.array([n for n, _ in rows], dtype=float)
    times = np.array([t for _, t in rows], dtype=float)
    if len(set(sizes)) < 2:
        raise BadParameters("Fitting an exponent needs at least two distinct sizes")
    slope, _ = np.polyfit(np.log(sizes), np.log(np.maximum(times, 1e-9)), 1)
    return float(slope)


class BenchCommand(Command):
    """
    Print ``n,wall_time`` rows and ``exponent <slope>``.

    Each instance is timed ``repeat`` times and the fastest run is kept.
    The connectivity test and per-flip validation are skipped; every run
    still checks its tree pair. Fails when the slope exceeds
    ``bench.max_exponent``.
    """

    def execute(self, args: argparse.Namespace) -> None:
        cfg = self.config(args)
        if args.sizes:
            cfg = cfg.model_copy(
                update={"bench": cfg.bench.model_copy(update={"schedule": args.sizes})}
            )
        repeat = args.repeat or cfg.bench.repeat
        instances = corpus(args.profile, cfg)

        rows: List[Tuple[int, float]] = []
        print("n,wall_time")
        for instance in instances:
            susp = suspend(instance.graph, instance.roots, check=False)
            best = None
            for _ in range(repeat):
                start = time.perf_counter()
                run_pipeline(susp, cfg.minimize.flip_cap_factor, validate_every_flip=False)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            n = instance.graph.n_vertices
            rows.append((n, best))
            print(f"{n},{best:.6f}", flush=True)
            logger.debug(f"{instance.name}: {best:.3f}s")

        slope = fit_exponent(rows)
        print(f"exponent {slope:.3f}")
        if slope > cfg.bench.max_exponent:
            raise VerificationFailed(
                f"Fitted exponent {slope:.3f} exceeds {cfg.bench.max_exponent}"
            )
