"""
Verify report formatters: console, CSV and JSON.
"""

import json
from collections.abc import Sequence
from typing import Any

from utils.tables import format_cell, write_table_file

from .generator import VerifyReport

CSV_COLUMNS = ("inequality", "k", "lhs", "lhs_se", "rhs", "rhs_se", "margin_se", "verdict")


def report_rows(report: VerifyReport) -> list[list[Any]]:
    """Rows matching CSV_COLUMNS, one per check."""
    return [
        [check.inequality, check.k, check.lhs, check.lhs_se, check.rhs, check.rhs_se, check.margin_se, check.verdict]
        for check in report.checks
    ]


def export_report_csv(report: VerifyReport, output_path: str, comments: Sequence[str] = ()) -> None:
    """
    Export report to CSV file

    Args:
        report: Audit report
        output_path: Path to output file
        comments: Preamble lines written as ``# ...``
    """
    write_table_file(output_path, CSV_COLUMNS, report_rows(report), comments)


def export_report_json(report: VerifyReport, output_path: str) -> None:
    """
    Export report to JSON file

    Args:
        report: Audit report
        output_path: Path to output file
    """
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)


def format_report_console(report: VerifyReport) -> str:
    """
    Format report for console output

    Args:
        report: Audit report

    Returns:
        Formatted string for console display
    """
    lines = []

    lines.append("=" * 80)
    lines.append("PROOF-CHAIN AUDIT")
    lines.append("=" * 80)
    lines.append(f"Status: {report.status}")
    lines.append(f"Timestamp: {report.timestamp}")
    lines.append(f"Blocklength: {report.blocklength}")
    lines.append(f"Samples: {report.samples:,}")
    lines.append(f"Seed: {report.seed}")
    lines.append(f"ℓ₀: {report.ell0}")
    if report.discarded:
        lines.append(f"Discarded draws: {report.discarded:,}")
    lines.append("")

    lines.append("SUMMARY")
    lines.append("-" * 80)
    lines.append(report.summary())
    lines.append("")

    lines.append("CHECKS")
    lines.append("-" * 80)
    lines.append(f"{'step':<8}{'k':>5}  {'lhs':>14}  {'rhs':>14}  {'margin/se':>10}  verdict")
    for check in report.checks:
        lines.append(
            f"{check.inequality:<8}{check.k:>5}  {_number(check.lhs):>14}  {_number(check.rhs):>14}  "
            f"{_number(check.margin_se, 2):>10}  {check.verdict}"
            + (f" ({check.note})" if check.verdict == "SKIPPED" else "")
        )
    lines.append("")

    if report.failures:
        lines.append("VIOLATIONS")
        lines.append("-" * 80)
        for i, check in enumerate(report.failures, 1):
            lines.append(
                f"{i}. {check.inequality} at k={check.k}: lhs {check.lhs:.6f} ± {check.lhs_se:.2g} "
                f"exceeds rhs {check.rhs:.6f} ± {check.rhs_se:.2g}"
            )
        lines.append("")

    lines.append("=" * 80)

    return "\n".join(lines)


def _number(value: float | None, digits: int = 6) -> str:
    if value is None or not format_cell(value):
        return "-"
    return f"{value:.{digits}f}"
