"""
Proof-chain audit: Monte-Carlo checks of every inequality behind the bound.
"""

from .formatters import CSV_COLUMNS, export_report_csv, export_report_json, format_report_console, report_rows
from .generator import (
    CHAIN_STEPS,
    FIRST_TERMS,
    InequalityCheck,
    Verdict,
    VerifyReport,
    default_audit_points,
    verify_proof_chain,
)

__all__ = [
    "CHAIN_STEPS",
    "CSV_COLUMNS",
    "FIRST_TERMS",
    "InequalityCheck",
    "Verdict",
    "VerifyReport",
    "default_audit_points",
    "export_report_csv",
    "export_report_json",
    "format_report_console",
    "report_rows",
    "verify_proof_chain",
]
