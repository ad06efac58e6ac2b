"""
CLI Module for Schur Idempotent Norms

Argparse front end over the norm, classification, certificate and random
experiment modules.

Usage:
    python -m cli.main <subcommand> [options]
"""

from cli.main import build_parser, main

__all__ = ["build_parser", "main"]
