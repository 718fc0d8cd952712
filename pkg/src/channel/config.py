"""
Channel configuration and validation.

ChannelConfig bundles everything needed to describe one channel use block:
profile, tap memory, noise variance, input power and blocklength. It is
immutable; the ``with_*`` helpers return modified copies for sweeps.
"""

import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigValidationError, ValidationIssue
from .gaussian.entropy import regularity_from_magnitude
from .profile import DecayProfile
from .taps import TapAssignment, TapProcess

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelConfig:
    """
    Channel Y_k = Σ_ℓ H_k^{(k−ℓ)}·X_ℓ + Z_k over n uses.

    Attributes:
        profile: Power-delay profile {α_ℓ}
        taps: Autoregression coefficient per delay
        noise_var: Noise variance σ² (> 0)
        power: Average input power P (≥ 0)
        blocklength: Number of channel uses n (≥ 1)
    """

    profile: DecayProfile
    taps: TapAssignment = field(default_factory=TapAssignment)
    noise_var: float = 1.0
    power: float = 1.0
    blocklength: int = 1

    @property
    def snr(self) -> float:
        """SNR = P/σ²."""
        return self.power / self.noise_var

    def tap(self, ell: int) -> TapProcess:
        """Tap process at delay ℓ."""
        return TapProcess(self.taps.coefficient(ell), self.profile.alpha(ell))

    def with_snr(self, snr: float) -> "ChannelConfig":
        """Copy with P = SNR·σ²."""
        return replace(self, power=snr * self.noise_var)

    def with_power(self, power: float) -> "ChannelConfig":
        return replace(self, power=power)

    def with_blocklength(self, blocklength: int) -> "ChannelConfig":
        return replace(self, blocklength=blocklength)

    def to_dict(self) -> dict:
        """Summary for logs and reports."""
        return {
            "profile": self.profile.describe(),
            "taps": self.taps.describe(),
            "noise_var": self.noise_var,
            "power": self.power,
            "snr": self.snr if self.noise_var > 0 else None,
            "blocklength": self.blocklength,
        }


def _finite_number(value: object) -> bool:
    return isinstance(value, (int, float, np.floating, np.integer)) and math.isfinite(float(value))


def collect_issues(config: ChannelConfig) -> list[ValidationIssue]:
    """
    Check a configuration against every model assumption.

    Returns:
        All violations found (empty when the configuration is valid)
    """
    issues: list[ValidationIssue] = []

    sup = config.profile.sup_alpha()
    if not math.isfinite(sup):
        issues.append(ValidationIssue("channel.profile", "sup of the path variances must be finite", sup))

    if not _finite_number(config.noise_var) or config.noise_var <= 0.0:
        issues.append(ValidationIssue("channel.noise_var", "noise variance must be positive", config.noise_var))

    if not _finite_number(config.power) or config.power < 0.0:
        issues.append(ValidationIssue("experiment.power", "input power must be finite and non-negative", config.power))

    if isinstance(config.blocklength, bool) or not isinstance(config.blocklength, (int, np.integer)):
        issues.append(ValidationIssue("experiment.blocklength", "blocklength must be an integer", config.blocklength))
    elif config.blocklength < 1:
        issues.append(ValidationIssue("experiment.blocklength", "blocklength must be at least 1", config.blocklength))

    magnitude = config.taps.sup_magnitude(config.profile)
    if magnitude is not None and magnitude > 1.0:
        issues.append(ValidationIssue("channel.taps", "tap coefficients must satisfy |a| <= 1", magnitude))
    elif regularity_from_magnitude(magnitude) == -math.inf:
        issues.append(
            ValidationIssue(
                "channel.taps",
                "regularity constant is −∞ (an active path has |a| = 1)",
                magnitude,
            )
        )

    return issues


def validate_config(config: ChannelConfig) -> ChannelConfig:
    """
    Validate a channel configuration.

    Args:
        config: Configuration to check

    Returns:
        Normalized configuration (float power and noise variance, int
        blocklength); SNR is derived as P/σ²

    Raises:
        ConfigValidationError: Listing every violated assumption
    """
    issues = collect_issues(config)
    if issues:
        for issue in issues:
            logger.debug(f"Validation issue: {issue}")
        raise ConfigValidationError(issues)

    normalized = replace(
        config,
        noise_var=float(config.noise_var),
        power=float(config.power),
        blocklength=int(config.blocklength),
    )
    logger.debug(f"Validated channel config: {normalized.to_dict()}")
    return normalized
