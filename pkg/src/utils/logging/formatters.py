"""
Log formatters for fadingcap.

JSONFormatter writes one object per record for collection next to the CSV
artifacts of a run; ConsoleFormatter is the default on a terminal.
"""

import json
import logging
import os
import sys
import traceback
from datetime import datetime, timezone
from typing import Any

import numpy as np

UTC = timezone.utc

# Attributes every LogRecord carries; anything else came in through ``extra=``
_RECORD_FIELDS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}

LEVEL_COLORS = {
    "DEBUG": "\033[36m",
    "INFO": "\033[32m",
    "WARNING": "\033[33m",
    "ERROR": "\033[31m",
    "CRITICAL": "\033[35m",
}
RESET = "\033[0m"


def extra_context(record: logging.LogRecord) -> dict[str, Any]:
    """Fields attached to a record through ``extra=`` or a context filter."""
    return {
        key: value
        for key, value in vars(record).items()
        if key not in _RECORD_FIELDS and not key.startswith("_")
    }


def _plain(value: Any) -> Any:
    """Numpy scalars and arrays to Python values; complex numbers to [re, im]."""
    if isinstance(value, np.ndarray):
        return [_plain(item) for item in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _json_default(value: Any) -> Any:
    plain = _plain(value)
    return str(plain) if plain is value else plain


class JSONFormatter(logging.Formatter):
    """
    One JSON object per record.

    Keys: level, logger, message, app, timestamp, hostname, source, thread,
    context (the ``extra=`` fields) and exception when one is attached.
    """

    def __init__(
        self,
        include_timestamp: bool = True,
        include_hostname: bool = True,
        app_name: str = "fadingcap",
    ):
        super().__init__()
        self.include_timestamp = include_timestamp
        self.include_hostname = include_hostname
        self.app_name = app_name
        self.hostname = os.uname().nodename if include_hostname else None

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "app": self.app_name,
        }
        if self.include_timestamp:
            entry["timestamp"] = datetime.fromtimestamp(record.created, UTC).isoformat()
        if self.hostname:
            entry["hostname"] = self.hostname

        entry["source"] = {"file": record.pathname, "line": record.lineno, "function": record.funcName}
        # Chunk workers log from pool threads
        entry["thread"] = record.threadName

        context = extra_context(record)
        if context:
            entry["context"] = {key: _plain(value) for key, value in context.items()}

        if record.exc_info and record.exc_info[0] is not None:
            exc_type, exc_value, exc_tb = record.exc_info
            entry["exception"] = {
                "type": exc_type.__name__,
                "message": str(exc_value),
                "traceback": traceback.format_exception(exc_type, exc_value, exc_tb),
            }

        return json.dumps(entry, default=_json_default)


class ConsoleFormatter(logging.Formatter):
    """
    ``time [LEVEL] logger: message [key=value, ...]`` with coloured levels on a TTY.
    """

    def __init__(self, use_colors: bool = True):
        super().__init__(
            fmt="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        self.use_colors = use_colors and sys.stderr.isatty()

    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if self.use_colors and levelname in LEVEL_COLORS:
            record.levelname = f"{LEVEL_COLORS[levelname]}{levelname}{RESET}"
        try:
            text = super().format(record)
        finally:
            record.levelname = levelname

        context = extra_context(record)
        if context:
            text += " [" + ", ".join(f"{key}={_plain(value)}" for key, value in context.items()) + "]"
        return text
