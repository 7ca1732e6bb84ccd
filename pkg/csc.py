import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from core.config import settings
from core.errors import ParseError
from core.logging import LoggerConfig
from core.serialization import parse_rational
from enums.algorithm import Algorithm
from enums.generator import CandidateGenerator
from runners.commands import (
    CheckRunner,
    CommandRunner,
    NineGonRunner,
    OracleRunner,
    PlotRunner,
    RegionRunner,
    SearchRunner,
)

RUNNERS = {
    "check": CheckRunner,
    "ninegon": NineGonRunner,
    "region": RegionRunner,
    "plot": PlotRunner,
    "oracle": OracleRunner,
    "search": SearchRunner,
}


def rational(text: str) -> Fraction:
    """argparse type for exact rationals ("3/4", "0.75", "2")."""
    try:
        return parse_rational(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def scale(text: str) -> Fraction:
    value = rational(text)
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"scale must satisfy 0 < scale < 1, got {value}")
    return value


def digits(text: str) -> int:
    value = int(text)
    if value < 6:
        raise argparse.ArgumentTypeError(f"at least 6 digits are required, got {value}")
    return value


def nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Configure command-line arguments.

    Returns:
        argparse.Namespace: Configured arguments.
    """
    parser = argparse.ArgumentParser(prog="csc", description=settings.DESCRIPTION)
    parser.add_argument(
        "--log-level",
        type=str,
        default=settings.LOG_LEVEL,
        help="Minimum level of the log written to stderr.",
    )
    parser.add_argument(
        "--log-file",
        action="store_true",
        default=settings.LOG_TO_FILE,
        help=f"Also write a rotated log file to {settings.LOG_DIR}.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    algorithm = argparse.ArgumentParser(add_help=False)
    algorithm.add_argument(
        "--algorithm",
        choices=[a.value for a in Algorithm],
        default=str(settings.DEFAULT_ALGORITHM),
        help="Region construction: all triples (naive) or tallest triangles.",
    )

    check = commands.add_parser(
        "check", parents=[algorithm], help="Decide c.s.c. position of a point set."
    )
    check.add_argument("file", help="Point-set JSON file.")
    check.add_argument(
        "--subsets", type=int, metavar="K", help="Check every K-point subset instead."
    )
    check.add_argument(
        "--certificate",
        action="store_true",
        help="After YES, print a supporting line at every point.",
    )

    ninegon = commands.add_parser("ninegon", help="Build (and verify) the nine-gon.")
    ninegon.add_argument("--scale", type=scale, default=parse_rational(settings.NINEGON_SCALE))
    ninegon.add_argument("--digits", type=digits, default=settings.NINEGON_DIGITS)
    ninegon.add_argument("--verify", action="store_true", help="Print the verification report.")
    ninegon.add_argument("--out", help="Write the point set to this file.")

    region = commands.add_parser(
        "region", parents=[algorithm], help="Compute the admissible-center region."
    )
    region.add_argument("file", help="Point-set JSON file.")
    region.add_argument("--out", help="Write the region JSON to this file.")

    plot = commands.add_parser("plot", parents=[algorithm], help="Render an SVG figure.")
    plot.add_argument("file", help="Point-set JSON file.")
    plot.add_argument("--region", help="Region JSON file to draw instead of computing one.")
    plot.add_argument(
        "--center",
        type=rational,
        nargs=2,
        metavar=("X", "Y"),
        help="Also draw the set reflected through this center.",
    )
    plot.add_argument("-o", "--out", help="Write the SVG to this file.")

    oracle = commands.add_parser("oracle", help="Test one center directly.")
    oracle.add_argument("file", help="Point-set JSON file.")
    oracle.add_argument(
        "--center", type=rational, nargs=2, metavar=("X", "Y"), required=True
    )

    search = commands.add_parser("search", help="Search for larger counterexamples.")
    search.add_argument("--size", type=int, required=True, help="Points per candidate.")
    search.add_argument("--trials", type=int, default=settings.SEARCH_TRIALS)
    search.add_argument("--seed", type=nonnegative, default=settings.SEARCH_SEED)
    search.add_argument("--jobs", type=int, default=settings.SEARCH_JOBS)
    search.add_argument(
        "--generator",
        choices=[g.value for g in CandidateGenerator],
        default=CandidateGenerator.PERTURBED_NINEGON.value,
    )
    search.add_argument(
        "--magnitude", type=rational, default=parse_rational(settings.SEARCH_MAGNITUDE)
    )
    search.add_argument(
        "--shrink", action="store_true", help="Simplify coordinates of each finding."
    )

    return parser.parse_args(argv)


def get_command_runner(args: argparse.Namespace) -> CommandRunner:
    """
    Factory method to create the runner of the selected sub-command.
    """
    return RUNNERS[args.command](args)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parses arguments, configures logging and runs the command.

    Returns:
        int: The process exit code; argparse exits with 2 on usage errors.
    """
    args = parse_args(argv)
    LoggerConfig(level=args.log_level, to_file=args.log_file)
    return get_command_runner(args).run()


if __name__ == "__main__":
    sys.exit(main())
