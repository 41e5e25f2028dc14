"""
Constants for the fourtree package.

File locations, environment overrides and the colour conventions shared by
the core modules and the exporters.
"""

import os

# Package directory (src/fourtree)
PACKAGE_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Literal fixtures shipped with the package
DATA_DIR = os.path.join(PACKAGE_ROOT, "data")

DEFAULT_CONFIG_PATH = os.path.join(PACKAGE_ROOT, "config", "default.yaml")

# User configuration overlay
USER_CONFIG_PATH = os.environ.get("FOURTREE_CONFIG")

SAMPLE10_GRAPH_PATH = os.path.join(DATA_DIR, "sample10.graph")
SAMPLE10_WOOD_PATH = os.path.join(DATA_DIR, "sample10.wood")

COLORS = (1, 2, 3)
COLOR_NAMES = {1: "red", 2: "green", 3: "blue"}

# Exit codes of the command-line front end
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_INTERRUPTED = 130

DEFAULT_CONFIG = {
    "logging": {"level": "INFO"},
    "minimize": {"flip_cap_factor": 4, "validate_every_flip": True},
    "connectivity": {"check": True},
    "oracle": {"tree_limit": 10_000_000, "keep_valid_pairs_limit": 200_000},
    "bench": {
        "schedule": [1250, 2500, 5000, 10000, 20000],
        "max_exponent": 2.3,
        "seed": 2024,
        "repeat": 1,
    },
    "corpus": {
        "seed": 7,
        "small_triangulations": [5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
        "medium_sizes": [20, 30, 50, 75, 100, 150, 200, 300, 400, 500],
        "medium_per_size": 20,
    },
}


def next_color(c: int) -> int:
    """Colour i+1 in the cyclic order 1 -> 2 -> 3 -> 1."""
    return c % 3 + 1


def prev_color(c: int) -> int:
    """Colour i-1 in the cyclic order."""
    return (c + 1) % 3 + 1
