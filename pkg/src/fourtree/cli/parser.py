import argparse

from fourtree.commands import (
    BenchCommand,
    ExportCommand,
    GenerateCommand,
    OracleCommand,
    SolveCommand,
    VerifyCommand,
)
from fourtree.core.gen import PROFILES


def _roots_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--roots",
        type=int,
        nargs=3,
        metavar=("R1", "R2", "R3"),
        help="Roots, clockwise on the outer face (default: the file's roots line)",
    )


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourtree",
        description="Degree-4 spanning trees with degree-4 dual co-trees for plane graphs",
    )
    parser.add_argument("--config", help="YAML file overriding the default settings")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    verbosity.add_argument("--quiet", action="store_true", help="Log warnings and errors only")
    subparsers = parser.add_subparsers(dest="action", required=True)

    # Generate subparser
    generate_parser = subparsers.add_parser("generate", help="Write generated graph files")
    source = generate_parser.add_mutually_exclusive_group()
    source.add_argument(
        "--family",
        choices=["wheel", "prism", "antiprism", "platonic", "sample10", "crown", "random"],
        help="Graph family",
    )
    source.add_argument("--corpus", choices=PROFILES, help="Write a whole corpus profile")
    generate_parser.add_argument(
        "--k", type=int, help="Size parameter of wheel, prism, antiprism, crown"
    )
    generate_parser.add_argument("--n", type=int, help="Vertex count of a random triangulation")
    generate_parser.add_argument(
        "--name",
        choices=["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"],
        help="Platonic solid",
    )
    generate_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    generate_parser.add_argument("--output", help="Output file (default: stdout)")
    generate_parser.add_argument("--output-dir", help="Directory for --corpus files")
    generate_parser.set_defaults(func=GenerateCommand().execute)

    # Solve subparser
    solve_parser = subparsers.add_parser("solve", help="Build the tree pair of a graph")
    solve_parser.add_argument("graph", help="Graph file")
    _roots_argument(solve_parser)
    solve_parser.add_argument("--dump-wood", metavar="FILE", help="Write the minimal wood")
    solve_parser.add_argument(
        "--dump-opp", action="store_true", help="Include both path partitions in the output"
    )
    solve_parser.add_argument("--output", help="Output file (default: stdout)")
    solve_parser.set_defaults(func=SolveCommand().execute)

    # Verify subparser
    verify_parser = subparsers.add_parser("verify", help="Check a spanning tree and its co-tree")
    verify_parser.add_argument("graph", help="Graph file")
    tree = verify_parser.add_mutually_exclusive_group(required=True)
    tree.add_argument("--tree", help='Tree edges as "u-v u-v ..."')
    tree.add_argument("--tree-file", help="File holding the tree edges")
    _roots_argument(verify_parser)
    verify_parser.add_argument(
        "--check-roots", action="store_true", help="Also check the root degree pattern"
    )
    verify_parser.set_defaults(func=VerifyCommand().execute)

    # Oracle subparser
    oracle_parser = subparsers.add_parser(
        "oracle", help="Exhaustive optimum over all spanning trees"
    )
    oracle_parser.add_argument("graph", help="Graph file")
    _roots_argument(oracle_parser)
    oracle_parser.add_argument(
        "--limit", type=int, help="Largest spanning tree count to enumerate"
    )
    oracle_parser.set_defaults(func=OracleCommand().execute)

    # Bench subparser
    bench_parser = subparsers.add_parser("bench", help="Time the pipeline and fit the exponent")
    bench_parser.add_argument("--profile", choices=["bench", "medium"], default="bench")
    bench_parser.add_argument("--sizes", type=int, nargs="+", help="Override the bench schedule")
    bench_parser.add_argument("--repeat", type=int, help="Runs per instance, fastest kept")
    bench_parser.set_defaults(func=BenchCommand().execute)

    # Export subparser
    export_parser = subparsers.add_parser("export", help="Render a graph as DOT or SVG")
    export_parser.add_argument("graph", help="Graph file")
    export_parser.add_argument("--format", choices=["dot", "svg"], default="svg")
    _roots_argument(export_parser)
    export_parser.add_argument("--output", help="Output file (default: stdout)")
    export_parser.add_argument(
        "--no-solve", action="store_true", help="Draw the graph without wood or trees"
    )
    export_parser.set_defaults(func=ExportCommand().execute)

    return parser
