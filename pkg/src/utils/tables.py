"""
CSV table writing shared by every report.

Floats are written with ``repr`` so values round-trip exactly; missing or
non-finite values become empty cells. Optional ``#`` comment lines go
before the header.
"""

import csv
import io
import math
import os
from collections.abc import Iterable, Sequence
from typing import Any, TextIO


def format_cell(value: Any) -> str:
    """
    Render one CSV cell.

    Example:
        >>> format_cell(0.1), format_cell(None), format_cell(float("nan"))
        ('0.1', '', '')
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        value = value.item()
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else ""
    return str(value)


def write_table(
    stream: TextIO,
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Sequence[str] = (),
) -> None:
    """
    Write comment lines, a header and rows to an open text stream.

    Args:
        stream: Destination opened with ``newline=""``
        columns: Header names
        rows: Row values, one per column
        comments: Lines written as ``# <line>`` before the header
    """
    for comment in comments:
        stream.write(f"# {comment}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])


def write_table_file(
    path: str,
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Sequence[str] = (),
) -> None:
    """Write a table to ``path``, creating parent directories."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        write_table(handle, columns, rows, comments)


def render_table(columns: Sequence[str], rows: Iterable[Sequence[Any]], comments: Sequence[str] = ()) -> str:
    """Table as a string (for stdout and tests)."""
    buffer = io.StringIO()
    write_table(buffer, columns, rows, comments)
    return buffer.getvalue()
