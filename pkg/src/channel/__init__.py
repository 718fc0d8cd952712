"""
Channel model for discrete-time non-coherent multipath fading.

Power-delay profiles with analytic tails, per-path Gaussian tap processes,
configuration validation and decay-regime classification. The Gaussian
machinery (covariances, entropies, sampling) lives in ``channel.gaussian``.
"""

from .config import ChannelConfig, collect_issues, validate_config
from .errors import (
    ChannelModelError,
    ConfigValidationError,
    EntropyRateUndefinedError,
    FactorizationError,
    ProfileError,
    TapProcessError,
    ValidationIssue,
)
from .profile import (
    DecayClass,
    DecayProfile,
    DoubleExpTail,
    GeometricTail,
    SuperDoubleExpTail,
    TailModel,
    ZeroTail,
    alpha_at,
    classify_decay,
    finite_memory_length,
    sup_alpha,
    support_set,
)
from .taps import TapAssignment, TapProcess

__all__ = [
    "ChannelConfig",
    "ChannelModelError",
    "ConfigValidationError",
    "DecayClass",
    "DecayProfile",
    "DoubleExpTail",
    "EntropyRateUndefinedError",
    "FactorizationError",
    "GeometricTail",
    "ProfileError",
    "SuperDoubleExpTail",
    "TailModel",
    "TapAssignment",
    "TapProcess",
    "TapProcessError",
    "ValidationIssue",
    "ZeroTail",
    "alpha_at",
    "classify_decay",
    "collect_issues",
    "finite_memory_length",
    "sup_alpha",
    "support_set",
    "validate_config",
]
