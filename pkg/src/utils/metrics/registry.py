"""
Registry helpers shared by the metric classes.
"""

import logging
import os
from typing import Callable, TypeVar

from prometheus_client import REGISTRY, CollectorRegistry, write_to_textfile

logger = logging.getLogger(__name__)

T = TypeVar("T")


def get_or_create_metric(
    metric_factory: Callable[[], T],
    metric_name: str,
    registry: CollectorRegistry = REGISTRY,
) -> T:
    """
    Create a metric, or return the one already registered under that name.

    Args:
        metric_factory: Callable that creates the metric (e.g., lambda: Counter(...))
        metric_name: Name of the metric for lookup if already registered
        registry: Prometheus registry the factory registers into

    Returns:
        The metric instance (either newly created or existing)

    Example:
        SAMPLES = get_or_create_metric(
            lambda: Counter("samples_total", "Samples drawn", ["estimator"]),
            "samples_total",
        )
    """
    try:
        return metric_factory()
    except ValueError:
        existing = registry._names_to_collectors.get(metric_name)
        if existing is not None:
            return existing  # type: ignore[return-value]
        raise


def write_metrics_file(path: str, registry: CollectorRegistry = REGISTRY) -> None:
    """
    Write the registry in Prometheus text exposition format.

    Args:
        path: Destination file; parent directories are created
        registry: Registry to serialize
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    write_to_textfile(path, registry)
    logger.info(f"Metrics written to {path}")
