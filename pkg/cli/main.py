#!/usr/bin/env python3
"""
Command-Line Interface for Schur Idempotent Norms

Subcommands estimate, classify and certify Schur multiplier norms of 0-1
matrices and reproduce the exact-value tables and random experiments.

Usage:
    python -m cli.main norm trie
    python -m cli.main classify matrix.txt --structure
    python -m cli.main verify-certs --json
    schur-norms random --m 8 --n 8 --p 0.5 --trials 200 --seed 42

Exit codes: 0 success, 1 a check failed, 2 invalid input or configuration.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence
from typing import Any

from loguru import logger
from pydantic import ValidationError

from cli import commands
from cli.report import RunReport
from src import __version__
from src.config import Settings, load_settings
from src.exceptions import ConfigError, InputError, SchurError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def configure_logging(verbose: bool = False) -> None:
    """Configure logging for CLI usage."""
    logger.remove()
    if verbose:
        logger.add(sys.stderr, level="DEBUG")
    else:
        logger.add(sys.stderr, level="WARNING")


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Emit a JSON run report")
    parent.add_argument("--config", default=None, help="Solver settings YAML")
    parent.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return parent


def _solver_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--tol", type=float, default=None, help="Target upper - lower")
    parent.add_argument("--restarts", type=int, default=None, help="Lower-bound restarts")
    parent.add_argument("--max-iters", type=int, default=None, help="Ascent iterations per restart")
    parent.add_argument("--bounds-seed", type=int, default=None, help="Seed of the restart orthogonals")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """The full argument parser."""
    common = _common_options()
    solver = _solver_options()
    parser = argparse.ArgumentParser(
        prog="schur-norms",
        description="Schur multiplier norms of 0-1 matrices",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("norm", parents=[common, solver], help="Certified bounds for one matrix")
    p.add_argument("matrix", nargs="?", help="File, catalog name, or '-' for stdin")
    p.add_argument(
        "--witnesses",
        "--witness",
        dest="witness",
        action="store_true",
        help="Include witness matrices in JSON",
    )
    p.set_defaults(handler=commands.cmd_norm)

    p = sub.add_parser("classify", parents=[common, solver], help="Exact norm class")
    p.add_argument("matrix", nargs="?", help="File, catalog name, or '-' for stdin")
    p.add_argument("--structure", action="store_true", help="Report forbidden substructures")
    p.set_defaults(handler=commands.cmd_classify)

    p = sub.add_parser("catalog", parents=[common], help="List named graphs")
    p.add_argument("name", nargs="?", help="Show a single catalog entry")
    p.set_defaults(handler=commands.cmd_catalog)

    p = sub.add_parser("verify-certs", parents=[common], help="Re-check every stored certificate")
    p.add_argument("--tol", dest="cert_tol", type=float, default=None, help="Check tolerance")
    p.add_argument("--bracket-max-n", type=int, default=None, help="Largest [1 I_n] certificate")
    p.set_defaults(handler=commands.cmd_verify_certs)

    p = sub.add_parser("table", parents=[common, solver], help="The nine exact norms")
    p.set_defaults(handler=commands.cmd_table)

    p = sub.add_parser("paths", parents=[common, solver], help="Path norms against 4/pi")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--csv", default=None, help="Write rows to this CSV file")
    p.set_defaults(handler=commands.cmd_paths)

    p = sub.add_parser("enumerate", parents=[common, solver], help="Exhaustive small-matrix sweep")
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cache-dir", default=None, help="diskcache directory for class results")
    p.add_argument("--check", action="store_true", help="Run the oracle, gap and degree-two checks")
    p.add_argument("--csv", default=None, help="Write per-class rows to this CSV file")
    p.set_defaults(handler=commands.cmd_enumerate)

    p = sub.add_parser("random", parents=[common, solver], help="Expected norm of G(m, n, p)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="Master seed of the trials")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--exhaustive", action="store_true", help="Exact expectation by enumeration")
    p.add_argument("--growth", action="store_true", help="Check the square-root growth bound")
    p.add_argument("--csv", default=None, help="Write per-trial rows to this CSV file")
    p.set_defaults(handler=commands.cmd_random)

    p = sub.add_parser("signs", parents=[common, solver], help="Sign-matrix experiments")
    p.add_argument("matrix", nargs="?", help="Matrix for the sign-averaging check (at most 3x3)")
    p.add_argument("--survey", type=int, nargs=2, metavar=("M", "N"), help="Survey all M x N sign matrices")
    p.set_defaults(handler=commands.cmd_signs)

    p = sub.add_parser(
        "remark56",
        aliases=["obstruction-norms"],
        parents=[common, solver],
        help="Numerical norms of the obstructions",
    )
    p.set_defaults(handler=commands.cmd_remark56)

    p = sub.add_parser("witness", parents=[common], help="Dump witness matrices")
    p.add_argument("--path-n", type=int, default=None, help="Extremal path construction of size n")
    p.add_argument("--graph", default=None, help="Stored certificate of a catalog graph")
    p.set_defaults(handler=commands.cmd_witness)

    return parser


def apply_overrides(settings: Settings, args: argparse.Namespace) -> Settings:
    """Command-line values take precedence over the settings file."""
    updates = {
        key: value
        for key, value in (
            ("tol", getattr(args, "tol", None)),
            ("restarts", getattr(args, "restarts", None)),
            ("max_iters", getattr(args, "max_iters", None)),
            ("seed", getattr(args, "bounds_seed", None)),
        )
        if value is not None
    }
    if not updates:
        return settings
    bounds = settings.bounds.model_validate({**settings.bounds.model_dump(), **updates})
    return settings.model_copy(update={"bounds": bounds})


def _inputs(args: argparse.Namespace) -> dict[str, Any]:
    return {key: value for key, value in vars(args).items() if key != "handler"}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT

    configure_logging(args.verbose)
    started = time.perf_counter()
    try:
        settings = apply_overrides(load_settings(args.config), args)
        outcome = args.handler(args, settings)
    except (InputError, ConfigError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SchurError as e:
        print(f"error: {e}", file=sys.stderr)
        logger.exception("Command failed")
        return EXIT_FAILED

    if args.json:
        report = RunReport(
            command=args.command,
            inputs=_inputs(args),
            results=outcome.results,
            passed=outcome.passed,
            seeds=outcome.seeds,
            wall_clock=time.perf_counter() - started,
        )
        print(report.to_json())
    else:
        print(outcome.text)
    return EXIT_OK if outcome.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
