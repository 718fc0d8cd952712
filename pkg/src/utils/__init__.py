"""
Shared infrastructure for the fadingcap toolkit

Provides:
- logging: console/JSON log configuration
- tracing: OpenTelemetry spans around estimators and CLI subcommands
- metrics: Prometheus counters for Monte Carlo work
- tables: CSV table writing with comment preambles
"""

__version__ = "0.1.0"
__all__ = ["logging", "tracing", "metrics", "tables"]
