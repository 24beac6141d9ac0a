"""
Command-line interface for the six-vertex DWBC toolkit

This module parses arguments, builds the RunConfig, dispatches to one
subcommand and writes its result to stdout as JSON, CSV or text.
Diagnostics go to stderr.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from sixvertex.cli.commands import COMMANDS, CommandResult, run_command
from sixvertex.cli.config import OUTPUT_FORMATS, RunConfig, build_config
from sixvertex.core.errors import PrecisionExhaustedError, SixVertexError, ToleranceError
from sixvertex.utils.serialization import to_csv, to_json, to_text

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler()],
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PRECISION = 2
EXIT_TOLERANCE = 3
EXIT_USAGE = 64

# flag name -> (type, help)
_SUBCOMMAND_FLAGS = {
    "--gamma": (float, "Anisotropy parameter gamma > 0"),
    "--t": (float, "Asymmetry parameter with |t| < gamma"),
    "--n": (int, "Lattice size"),
    "--n-min": (int, "Smallest lattice size of a sweep"),
    "--n-max": (int, "Largest lattice size of a sweep"),
    "--precision-bits": (int, "Target precision in bits (>= 64)"),
    "--start-bits": (int, "Initial working precision of the exact solver"),
    "--tolerance": (float, "Tolerance override for identity checks"),
    "--samples": (int, "Number of density sample points"),
    "--trials": (int, "Random draws per identity"),
    "--seed": (int, "Seed for randomized checks"),
    "--C": (float, "Constant C of the leading asymptote"),
}


def format_result(result: CommandResult, output: str, bits: int) -> str:
    """Render a CommandResult in the requested output format."""
    if output == "csv" and result.rows is not None:
        return to_csv(result.rows, result.columns, bits)
    if output == "csv":
        return to_csv([result.data], sorted(result.data), bits)
    if output == "text":
        return to_text(result.data, bits)
    return to_json(result.data, bits) + "\n"


def run(command: str, config: RunConfig, verbose: bool = False) -> CommandResult:
    """Run one subcommand and write its result to stdout.

    Args:
        command: Subcommand name
        config: Validated run configuration
        verbose: Whether to enable verbose logging

    Returns:
        CommandResult: The subcommand output
    """
    if verbose:
        logging.getLogger("sixvertex").setLevel(logging.DEBUG)

    result = run_command(command, config)
    sys.stdout.write(format_result(result, config.output, config.precision_bits))
    for line in result.lines:
        sys.stdout.write(line + "\n")
    return result


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixvertex",
        description="Six-vertex model with domain wall boundary conditions, antiferroelectric phase",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Exact partition function at n = 4
  sixvertex exact --gamma 1 --t 0.3 --n 4

  # The same value by exhaustive enumeration
  sixvertex brute --gamma 1 --t 0.3 --n 4

  # Equilibrium density as CSV
  sixvertex --format csv density --gamma 0.7 --t -0.3 --samples 201

  # Exact versus asymptotic partition function for n = 4..16
  sixvertex --format csv compare --gamma 1 --t 0.4 --n-min 4 --n-max 16

  # Randomized theta identity suite
  sixvertex identities --trials 1000 --seed 7

Config file format (flags override file values):
  # key = value, one per line
  gamma = 1.0
  t = 0.4
  precision_bits = 512

Environment:
  SIXV_PRECISION_BITS   default precision in bits
        """,
    )
    parser.add_argument("--config", help="Path to a key = value configuration file")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    parser.add_argument("--version", action="store_true", help="Print version information and exit")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, dest="output", help="Output format (default: json)")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=f"Run the {name} subcommand")
        for flag, (kind, text) in _SUBCOMMAND_FLAGS.items():
            sub.add_argument(flag, type=kind, default=None, help=text)
        sub.add_argument("--dump", action="store_true", default=None, help="Print every enumerated configuration")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    values = vars(args).copy()
    for key in ("config", "verbose", "version", "command"):
        values.pop(key, None)
    return values


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the command-line interface."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.version:
        from sixvertex import __version__

        print(f"sixvertex version {__version__}")
        return EXIT_OK

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = build_config(_overrides(args), args.config)
        if config.C is not None and config.C <= 0:
            raise ValueError(f"C must be positive, got {config.C}")
        run(args.command, config, verbose=args.verbose)
        return EXIT_OK
    except PrecisionExhaustedError as e:
        logger.error(f"Precision exhausted at {e.bits} bits: {e}")
        return EXIT_PRECISION
    except ToleranceError as e:
        logger.error(f"Selftest failed: {e}")
        return EXIT_TOLERANCE
    except (SixVertexError, ValueError) as e:
        logger.error(f"Error: {e}")
        return EXIT_DOMAIN
    except Exception as e:
        logger.error(f"Command failed with unexpected error: {e}", exc_info=True)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
