"""
Monte-Carlo estimate records.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import EstimationError


class EstimatorKind:
    """Constants for estimator kinds."""

    EXACT_MC = "exact-mc"
    CONDITIONAL_MC = "conditional-mc"
    DUALITY_UPPER = "duality-upper"


def mean_and_error(values: np.ndarray) -> tuple[float, float]:
    """
    Sample mean and standard error s/√M.

    Raises:
        EstimationError: With fewer than two samples
    """
    values = np.asarray(values, dtype=float)
    count = values.shape[0]
    if count < 2:
        raise EstimationError(f"at least two samples are needed for a standard error, got {count}")
    mean = float(np.mean(values))
    std_error = float(np.std(values, ddof=1) / math.sqrt(count))
    return mean, std_error


@dataclass(frozen=True)
class MIEstimate:
    """
    Monte-Carlo estimate in nats.

    Attributes:
        mean: Estimate
        std_error: Sample standard deviation / √samples
        samples: Samples used (after discards)
        blocklength: n
        seed: Seed the estimate was drawn with
        kind: One of EstimatorKind
        k: One-based time index for per-term estimates
        discarded: Samples dropped as degenerate
    """

    mean: float
    std_error: float
    samples: int
    blocklength: int
    seed: int
    kind: str
    k: int | None = None
    discarded: int = 0

    @classmethod
    def from_samples(
        cls,
        values: np.ndarray,
        blocklength: int,
        seed: int,
        kind: str,
        k: int | None = None,
        discarded: int = 0,
    ) -> "MIEstimate":
        mean, std_error = mean_and_error(values)
        return cls(
            mean=mean,
            std_error=std_error,
            samples=int(np.asarray(values).shape[0]),
            blocklength=blocklength,
            seed=seed,
            kind=kind,
            k=k,
            discarded=discarded,
        )

    def upper(self, sigmas: float = 3.0) -> float:
        return self.mean + sigmas * self.std_error

    def lower(self, sigmas: float = 3.0) -> float:
        return self.mean - sigmas * self.std_error

    def to_dict(self) -> dict:
        return asdict(self)
