"""
Command-line argument parser configuration.

This module sets up the argument parser for the fadingcap CLI tool,
defining all commands, their options and the CSV columns they emit.
"""

import argparse

from estimation import SWEEP_COLUMNS
from estimation.verify import CSV_COLUMNS as VERIFY_COLUMNS

from .commands import BOUND_COLUMNS, CLASSIFY_COLUMNS, SIMULATE_COLUMNS


def _columns(columns: tuple[str, ...]) -> str:
    return "CSV columns: " + ", ".join(columns)


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('config', help='Run configuration (YAML)')
    common.add_argument('--seed', type=int, help='Override experiment.seed')
    common.add_argument('--samples', type=int, help='Override experiment.samples')
    common.add_argument('--out-dir', help='Override output.directory')
    common.add_argument(
        '--workers',
        type=int,
        help='Worker threads for Monte-Carlo chunks (capped by FADINGCAP_MAX_WORKERS)'
    )
    common.add_argument(
        '--log-level',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        default='INFO',
        help='Logging level (default: INFO)'
    )
    common.add_argument('--log-json', action='store_true', help='Emit JSON log lines on stderr')
    common.add_argument('--log-file', help='Also append log lines to this file')
    common.add_argument('--metrics-file', help='Write Prometheus metrics to this file at exit')
    return common


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser for the CLI.

    Returns:
        Configured ArgumentParser instance
    """
    parser = argparse.ArgumentParser(
        prog='fadingcap',
        description="Capacity bounds and Monte-Carlo verification for non-coherent multipath fading channels",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Decay class of every profile in the config
  fadingcap classify configs/geometric_reference.yaml

  # SNR-independent constant K and finite-n bounds
  fadingcap bound configs/geometric_reference.yaml

  # Sample channel traces
  fadingcap simulate configs/geometric_reference.yaml --seed 3

  # MI sweep with SVG chart, 8 worker threads
  fadingcap mi configs/geometric_reference.yaml --workers 8

  # Proof-chain audit (exit code 2 on any violated inequality)
  fadingcap verify configs/geometric_reference.yaml --samples 100000

Exit codes: 0 success, 1 usage or configuration error, 2 verification failure.
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Available commands')
    common = _common_options()

    # ========== Classify command ==========
    subparsers.add_parser(
        'classify',
        parents=[common],
        help='Classify power-delay profiles (Bounded / Unbounded / Indeterminate)',
        description=_columns(CLASSIFY_COLUMNS),
    )

    # ========== Bound command ==========
    subparsers.add_parser(
        'bound',
        parents=[common],
        help='Evaluate K and the finite-blocklength capacity bound',
        description=_columns(BOUND_COLUMNS),
    )

    # ========== Simulate command ==========
    subparsers.add_parser(
        'simulate',
        parents=[common],
        help='Sample input/output traces through the channel',
        description=_columns(SIMULATE_COLUMNS),
    )

    # ========== MI command ==========
    mi_parser = subparsers.add_parser(
        'mi',
        parents=[common],
        help='Exact-mixture MI, duality upper estimate and bound over an SNR sweep',
        description=_columns(SWEEP_COLUMNS),
    )
    mi_parser.add_argument('--no-svg', action='store_true', help='Skip the SVG chart')

    # ========== Verify command ==========
    verify_parser = subparsers.add_parser(
        'verify',
        parents=[common],
        help='Audit every inequality of the bound by Monte Carlo',
        description=_columns(VERIFY_COLUMNS),
    )
    verify_parser.add_argument(
        '--ks',
        help='Comma-separated one-based time indices to audit (default: 1..ℓ₀, ℓ₀+1, n)'
    )
    verify_parser.add_argument(
        '--rhs-offset',
        type=float,
        default=0.0,
        help='Subtract this from every right-hand side (self-test; default: 0)'
    )
    verify_parser.add_argument(
        '--format',
        choices=['console', 'json'],
        default='console',
        help='Report format on stdout (CSV is always written; default: console)'
    )

    return parser
