"""Subcommand implementations for the pystirling command line."""

import argparse
import logging
import sys
from typing import Callable, Dict, Optional

from .base import SequenceKind, TriangleKind, base_triangle, sequence
from .bfile import compare, read_bfile, span, triangle_terms
from .checks import SuiteOptions, all_passed, format_report, run_suites
from .composites import composite_product
from .config import Config
from .errors import BFileError
from .output import OutputFormat, colorize, copy_to_clipboard, render_rows
from .triangle import Triangle, sign_twist

logger = logging.getLogger(__name__)

Builder = Callable[[int], Triangle]


def triangle_builder(a: str, b: Optional[str] = None, signed: bool = False) -> Builder:
    """Builder for a base triangle, or for the product A.B when b is given."""
    left = TriangleKind(a)
    right = TriangleKind(b) if b else None

    def build(last: int) -> Triangle:
        if right is None:
            triangle = base_triangle(left, last)
        else:
            triangle = composite_product((left, right), last)
        return sign_twist(triangle) if signed else triangle

    return build


def _wants_color(choice: str) -> bool:
    if choice == "always":
        return True
    if choice == "never":
        return False
    return sys.stdout.isatty()


def cmd_triangle(args: argparse.Namespace, config: Config) -> int:
    """Write rows 0..--rows of a triangle to standard output."""
    fmt = OutputFormat(args.format or config.output_format)
    triangle = triangle_builder(args.a, args.b, args.signed)(args.rows)
    text = render_rows(triangle.rows, fmt)
    if args.copy:
        copy_to_clipboard(text)
    if _wants_color(args.color):
        text = colorize(text, fmt)
    sys.stdout.write(text)
    return 0


def cmd_check(args: argparse.Namespace, config: Config) -> int:
    """Run a verification suite; exit 1 if any identity fails."""
    options = SuiteOptions(config, args.max_n, args.oracle_max_n)
    results = run_suites(args.suite, options)
    sys.stdout.write(format_report(results))
    return 0 if all_passed(results) else 1


def cmd_oeis_compare(args: argparse.Namespace, config: Config) -> int:
    """Compare a triangle read by rows (or a sequence) against a b-file."""
    try:
        bfile = read_bfile(args.bfile)
    except (BFileError, OSError) as e:
        print(f"Error: {args.bfile}: {e}", file=sys.stderr)
        return 2

    count = span(bfile, args.offset)
    logger.info("comparing %d b-file terms from %s", len(bfile), args.bfile)
    if args.sequence:
        terms = sequence(SequenceKind(args.sequence), count - 1) if count else []
    else:
        build = triangle_builder(args.a, args.b, args.signed)
        terms = triangle_terms(build, count, args.skip_column0)

    result = compare(bfile, terms, args.offset)
    if result.ok:
        print(f"match: {result.compared} terms compared")
        return 0
    mismatch = result.mismatch
    print(
        f"mismatch at index {mismatch.index}: "
        f"b-file has {mismatch.expected}, computed {mismatch.actual}"
    )
    return 1


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "triangle": cmd_triangle,
    "check": cmd_check,
    "oeis": cmd_oeis_compare,
}
