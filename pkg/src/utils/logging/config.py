"""
Root logger setup for fadingcap runs.

Console lines go to stderr so that CSV written to stdout stays clean. A
run context (the subcommand, later the seed) can be stamped on every
record so JSON lines from concurrent runs can be told apart.
"""

import logging
import os
import sys
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from .formatters import ConsoleFormatter, JSONFormatter

# Chatty at INFO during imports and SVG export
_NOISY_LOGGERS = ("matplotlib", "PIL", "opentelemetry")

_FILE_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
_TRUE_VALUES = ("true", "1", "yes")


class RunContextFilter(logging.Filter):
    """
    Attach fixed run fields to every record passing through a handler.

    Fields already present on a record (passed through ``extra=``) win.
    """

    def __init__(self, context: Mapping[str, Any]):
        super().__init__()
        self.context = dict(context)

    def update(self, **fields: Any) -> None:
        self.context.update(fields)

    def filter(self, record: logging.LogRecord) -> bool:
        for key, value in self.context.items():
            if not hasattr(record, key):
                setattr(record, key, value)
        return True


def _formatter(json_format: bool, app_name: str, console: bool) -> logging.Formatter:
    if json_format:
        return JSONFormatter(include_timestamp=True, include_hostname=True, app_name=app_name)
    if console:
        return ConsoleFormatter(use_colors=True)
    return logging.Formatter(fmt=_FILE_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")


def setup_logging(
    level: str = "INFO",
    json_format: bool = False,
    log_file: str | None = None,
    console_output: bool = True,
    run_context: Mapping[str, Any] | None = None,
    app_name: str = "fadingcap",
) -> RunContextFilter | None:
    """
    Configure the root logger for one run.

    Args:
        level: Log level name (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_format: JSON lines instead of human-readable text
        log_file: Append log lines to this file as well (parent directories are created)
        console_output: Log to stderr
        run_context: Fields stamped on every record, e.g. ``{"command": "mi"}``
        app_name: Value of the ``app`` field in JSON lines

    Returns:
        The installed RunContextFilter, or None when no run context was given
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    root_logger.handlers.clear()

    handlers: list[logging.Handler] = []
    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(_formatter(json_format, app_name, console=True))
        handlers.append(console_handler)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
        file_handler.setFormatter(_formatter(json_format, app_name, console=False))
        handlers.append(file_handler)

    context_filter = RunContextFilter(run_context) if run_context else None
    for handler in handlers:
        handler.setLevel(numeric_level)
        if context_filter is not None:
            handler.addFilter(context_filter)
        root_logger.addHandler(handler)

    for name in _NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    logging.getLogger(__name__).debug(
        f"Logging initialized: level={level}, file={log_file or 'none'}, json={json_format}"
    )
    return context_filter


def shutdown_logging() -> None:
    """Flush and detach every root handler at the end of a CLI run."""
    root_logger = logging.getLogger()

    for handler in root_logger.handlers[:]:
        try:
            handler.close()
        except Exception:
            pass
        root_logger.removeHandler(handler)

    logging.shutdown()


def configure_from_env() -> RunContextFilter | None:
    """
    Configure logging from environment variables.

    Environment variables:
        FADINGCAP_LOG_LEVEL: Log level (default: INFO)
        FADINGCAP_LOG_FILE: Log file path (default: none)
        FADINGCAP_LOG_JSON: JSON lines (default: false)
    """
    return setup_logging(
        level=os.getenv("FADINGCAP_LOG_LEVEL", "INFO"),
        json_format=os.getenv("FADINGCAP_LOG_JSON", "false").lower() in _TRUE_VALUES,
        log_file=os.getenv("FADINGCAP_LOG_FILE") or None,
    )
