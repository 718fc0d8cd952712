"""
Command-line interface for the fadingcap toolkit.

Available commands:
- classify: Decay class of each power-delay profile
- bound: SNR-independent constant K and finite-n capacity bounds
- simulate: Sample traces through the channel
- mi: Exact-mixture MI sweep with duality estimate and analytic bound
- verify: Monte-Carlo audit of the proof chain
"""

import logging
import sys
import time

from utils.logging import setup_logging, shutdown_logging
from utils.metrics import RunMetrics, write_metrics_file
from utils.tracing import initialize_tracing, shutdown_tracing, trace_operation

from ..errors import RunConfigError
from .commands import (
    COMMANDS,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    USAGE_ERRORS,
    cmd_bound,
    cmd_classify,
    cmd_mi,
    cmd_simulate,
    cmd_verify,
    load_run_config,
)
from .parser import create_parser

logger = logging.getLogger(__name__)


def run(argv: list[str] | None = None) -> int:
    """
    Parse arguments, execute one subcommand and return its exit code.

    Args:
        argv: Arguments without the program name (``sys.argv[1:]`` when None)

    Returns:
        0 on success, 1 on usage or configuration errors, 2 when ``verify``
        finds a violated inequality
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.command not in COMMANDS:
        parser.print_help()
        return EXIT_USAGE

    run_context = setup_logging(
        level=args.log_level,
        json_format=args.log_json,
        log_file=args.log_file,
        run_context={"command": args.command},
    )
    initialize_tracing()
    metrics = RunMetrics()
    started = time.perf_counter()
    code = EXIT_USAGE

    try:
        config = load_run_config(args)
        if run_context is not None:
            run_context.update(seed=config.experiment.seed)
        with trace_operation(f"cli.{args.command}", seed=config.experiment.seed, config=args.config):
            code = COMMANDS[args.command](args, config, metrics)
    except RunConfigError as e:
        logger.error(f"Invalid configuration{f' in {e.source}' if e.source else ''}:")
        for issue in e.issues:
            logger.error(f"  {issue}")
    except USAGE_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
    except Exception as e:
        logger.exception(f"{args.command} failed unexpectedly: {e}")
    finally:
        metrics.record_run(args.command, code == EXIT_OK, time.perf_counter() - started)
        if args.metrics_file:
            try:
                write_metrics_file(args.metrics_file)
            except OSError as e:
                logger.warning(f"Could not write metrics file {args.metrics_file}: {e}")
        shutdown_tracing()

    return code


def main() -> None:
    """Main entry point for the fadingcap CLI"""
    code = run()
    shutdown_logging()
    sys.exit(code)


__all__ = [
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_VERIFY_FAILED',
    'main',
    'run',
    'cmd_bound',
    'cmd_classify',
    'cmd_mi',
    'cmd_simulate',
    'cmd_verify',
    'create_parser',
]


if __name__ == '__main__':
    main()
