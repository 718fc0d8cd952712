"""
Structured logging for fadingcap runs.

Usage:
    from utils.logging import setup_logging

    # Once per process, before the first estimate
    context = setup_logging(level="INFO", run_context={"command": "mi"})

    logger = logging.getLogger(__name__)
    logger.info("Estimated mutual information", extra={"snr_db": 30.0, "samples": 200000})
"""

from .config import RunContextFilter, configure_from_env, setup_logging, shutdown_logging
from .formatters import ConsoleFormatter, JSONFormatter

__all__ = [
    "setup_logging",
    "configure_from_env",
    "shutdown_logging",
    "RunContextFilter",
    "JSONFormatter",
    "ConsoleFormatter",
]
