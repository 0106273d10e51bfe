#!/usr/bin/env python3
"""Main entry point for the pystirling command line."""

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .base import SequenceKind, TriangleKind
from .checks import SUITES
from .commands import COMMANDS
from .config import load_config
from .errors import ConfigError
from .output import OutputFormat

KINDS = [kind.value for kind in TriangleKind]


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pystirling",
        description="Exact Stirling, Lah and binomial triangles and their identities",
    )
    parser.add_argument("--version", action="version", version=f"pystirling v{__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-v) or builder detail (-vv) to stderr")
    parser.add_argument("--config", metavar="PATH", help="TOML configuration file")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    triangle = subparsers.add_parser("triangle", help="print a triangle or composite")
    triangle.add_argument("--a", required=True, choices=KINDS, help="left (or only) triangle")
    triangle.add_argument("--b", choices=KINDS, help="right factor of the composite A.B")
    triangle.add_argument("--rows", required=True, type=_non_negative, metavar="N",
                          help="emit rows 0..N")
    triangle.add_argument("--signed", action="store_true", help="apply (-1)^(n-m)")
    triangle.add_argument("--format", choices=[f.value for f in OutputFormat])
    triangle.add_argument("--color", choices=["auto", "always", "never"], default="auto")
    triangle.add_argument("--copy", action="store_true", help="also copy to the clipboard")

    check = subparsers.add_parser("check", help="run verification suites")
    check.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    check.add_argument("--max-n", type=_non_negative, metavar="N",
                       help="order for every suite instead of the configured ones")
    check.add_argument("--oracle-max-n", type=_non_negative, metavar="K",
                       help="largest n to enumerate in the oracle suite")

    oeis = subparsers.add_parser("oeis", help="compare against an OEIS b-file")
    source = oeis.add_mutually_exclusive_group(required=True)
    source.add_argument("--a", choices=KINDS)
    source.add_argument("--sequence", choices=[kind.value for kind in SequenceKind])
    oeis.add_argument("--b", choices=KINDS)
    oeis.add_argument("--bfile", required=True, metavar="PATH")
    oeis.add_argument("--offset", type=int, default=0, metavar="K",
                      help="b-file index of the first computed term")
    oeis.add_argument("--skip-column0", action="store_true",
                      help="drop column 0 of every row when linearizing")
    oeis.add_argument("--signed", action="store_true", help="apply (-1)^(n-m)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments and dispatch to a subcommand; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oeis" and args.sequence and args.b:
        parser.error("--b cannot be combined with --sequence")

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
