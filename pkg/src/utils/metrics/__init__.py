"""
Prometheus metrics for batch runs.

fadingcap runs are short-lived batch jobs, so metrics are not served over
HTTP. They are collected into a registry and optionally dumped in the
Prometheus text format at the end of a run (``--metrics-file``) for a
node-exporter textfile collector to pick up.

Usage:
    from utils.metrics import RunMetrics, write_metrics_file

    metrics = RunMetrics()
    metrics.record_run("mi", success=True, duration=12.5)
    write_metrics_file("out/metrics.prom", metrics.registry)
"""

from .registry import get_or_create_metric, write_metrics_file
from .run import RunMetrics

__all__ = [
    "RunMetrics",
    "get_or_create_metric",
    "write_metrics_file",
]
