"""
Metrics for CLI runs and Monte-Carlo estimation.

Tracks command outcomes, sample usage, discarded duality samples
and inequality verdicts.
"""

import logging

from prometheus_client import REGISTRY, CollectorRegistry, Counter, Gauge, Histogram

from .registry import get_or_create_metric

logger = logging.getLogger(__name__)


class RunMetrics:
    """
    Metrics for one fadingcap process

    Metrics are registered idempotently, so several instances on the same
    registry share the underlying collectors.
    """

    def __init__(self, registry: CollectorRegistry | None = None):
        """
        Initialize run metrics

        Args:
            registry: Prometheus registry (default: global REGISTRY)
        """
        self.registry = registry if registry is not None else REGISTRY
        reg = self.registry

        self.runs_total = get_or_create_metric(
            lambda: Counter(
                "fadingcap_runs_total",
                "Total number of CLI command runs",
                ["command", "status"],
                registry=reg,
            ),
            "fadingcap_runs_total",
            reg,
        )

        self.run_duration_seconds = get_or_create_metric(
            lambda: Histogram(
                "fadingcap_run_duration_seconds",
                "Duration of CLI command runs in seconds",
                ["command"],
                buckets=(0.1, 0.5, 1, 5, 10, 30, 60, 300, 900, 3600),
                registry=reg,
            ),
            "fadingcap_run_duration_seconds",
            reg,
        )

        self.samples_total = get_or_create_metric(
            lambda: Counter(
                "fadingcap_mc_samples_total",
                "Monte-Carlo samples drawn",
                ["estimator"],
                registry=reg,
            ),
            "fadingcap_mc_samples_total",
            reg,
        )

        self.discarded_samples_total = get_or_create_metric(
            lambda: Counter(
                "fadingcap_mc_discarded_samples_total",
                "Monte-Carlo samples discarded as numerically degenerate",
                ["estimator"],
                registry=reg,
            ),
            "fadingcap_mc_discarded_samples_total",
            reg,
        )

        self.verification_checks_total = get_or_create_metric(
            lambda: Counter(
                "fadingcap_verification_checks_total",
                "Audited inequality rows by verdict",
                ["inequality", "verdict"],
                registry=reg,
            ),
            "fadingcap_verification_checks_total",
            reg,
        )

        self.last_estimate = get_or_create_metric(
            lambda: Gauge(
                "fadingcap_last_estimate_nats",
                "Most recent per-channel-use estimate in nats",
                ["estimator"],
                registry=reg,
            ),
            "fadingcap_last_estimate_nats",
            reg,
        )

    def record_run(self, command: str, success: bool, duration: float) -> None:
        """
        Record a finished CLI command

        Args:
            command: Subcommand name
            success: Whether the command exited with status 0
            duration: Wall-clock duration in seconds
        """
        status = "success" if success else "failed"
        self.runs_total.labels(command=command, status=status).inc()
        self.run_duration_seconds.labels(command=command).observe(duration)

    def record_samples(self, estimator: str, samples: int, discarded: int = 0) -> None:
        """
        Record Monte-Carlo sample usage of one estimator run

        Args:
            estimator: Estimator label (exact_mi, duality, verify)
            samples: Samples drawn
            discarded: Samples dropped as degenerate
        """
        self.samples_total.labels(estimator=estimator).inc(samples)
        if discarded:
            self.discarded_samples_total.labels(estimator=estimator).inc(discarded)
            logger.debug(f"{estimator}: discarded {discarded} of {samples} samples")

    def record_estimate(self, estimator: str, value: float) -> None:
        """Set the latest per-use estimate for an estimator."""
        self.last_estimate.labels(estimator=estimator).set(value)

    def record_verification(self, inequality: str, verdict: str) -> None:
        """Count one audited inequality row."""
        self.verification_checks_total.labels(inequality=inequality, verdict=verdict).inc()
