import argparse
import logging
import sys
from typing import List, Optional

from .commands import COMMAND_RUNNERS, EXIT_INPUT, EXIT_INTERNAL, EXIT_MATH, Outcome
from .config import COMMANDS, FORMATS, RunConfig
from .render import render
from ..ce import DEFAULT_TRUNCATION, SIDES
from ..errors import GradualError, InputError, MathAssertionError

logger = logging.getLogger(__name__)

HELP = {
    "validate": "check the axioms of a Lie algebra or an L∞ structure",
    "cohomology": "Chevalley-Eilenberg cohomology dimensions, optionally with coefficients and a twist",
    "character": "dualizing character from the deformed Berezinian against the supertrace of ad",
    "hazewinkel": "compare twisted chain homology with cochain cohomology in complementary degrees",
    "divergence": "divergence of d_CE or of an L∞ structure",
    "linfty": "cohomology of a truncated (twisted) L∞ Chevalley-Eilenberg complex",
    "conjecture": "untwisted against divergence-twisted cohomology in complementary degrees",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", action="append", required=True, help="input JSON file or catalog name")
    common.add_argument(
        "-m", "--module", action="append", help="module JSON file, or one of trivial, adjoint, dual-adjoint (repeatable)"
    )
    common.add_argument("--truncation", type=int, default=None, help=f"truncation order (default {DEFAULT_TRUNCATION} for CE complexes)")
    common.add_argument("--max-degree", type=int, default=None, help="last degree reported")
    common.add_argument("--degree-window", type=int, nargs=2, metavar=("LO", "HI"), default=None, help="inclusive degree range")
    common.add_argument("--twist", default="none", help="none, divergence or file:PATH")
    common.add_argument("--side", choices=SIDES, default="left", help="twist side (default left)")
    common.add_argument("--samples", type=int, default=0, help="bimonomials sampled for the Hodge checks (character)")
    common.add_argument("--untwisted", action="store_true", help="Hazewinkel check without the supertrace twist")
    common.add_argument("--format", choices=FORMATS, default="json", help="report format (default json)")
    common.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="gradual", description="Exact computations for graded Lie and L∞ algebras")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=HELP[command])
    return parser


def exit_code(error: GradualError) -> int:
    """1 for bad input, 2 for a failed mathematical check, 3 for an internal inconsistency."""
    if isinstance(error, InputError):
        return EXIT_INPUT
    if isinstance(error, MathAssertionError):
        return EXIT_MATH
    return EXIT_INTERNAL


def run(config: RunConfig) -> Outcome:
    """Execute one command and write its report."""
    outcome = COMMAND_RUNNERS[config.command](config)
    text = render(outcome.report, config.format)
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text)
        logger.info(f"Report written to {config.output}")
    return outcome


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(RunConfig.from_args(args)).status
    except GradualError as e:
        logger.error(e.message)
        sys.stderr.write(f"error: {e.message}\n")
        return exit_code(e)
