"""
Gaussian machinery for the channel: tap autocovariances, conditional output
covariances, closed-form conditional entropies and tap-path sampling.
"""

from .covariance import (
    CondCovariance,
    autocovariance,
    autocovariance_matrix,
    conditional_cov,
    output_power,
    shifted_inputs,
)
from .entropy import (
    LOG_PI_E,
    EntropyChain,
    cholesky_factor,
    entropy_rate,
    regularity_constant,
    regularity_from_magnitude,
    schur_conditional_entropies,
    schur_conditional_variances,
)
from .sampling import SeedLike, complex_normal, make_rng, sample_tap_paths

__all__ = [
    "CondCovariance",
    "EntropyChain",
    "LOG_PI_E",
    "SeedLike",
    "autocovariance",
    "autocovariance_matrix",
    "cholesky_factor",
    "complex_normal",
    "conditional_cov",
    "entropy_rate",
    "make_rng",
    "output_power",
    "regularity_constant",
    "regularity_from_magnitude",
    "sample_tap_paths",
    "schur_conditional_entropies",
    "schur_conditional_variances",
    "shifted_inputs",
]
