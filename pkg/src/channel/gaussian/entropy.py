"""
Closed-form differential entropies for the Gaussian tap family.

All entropies are in nats for circularly-symmetric complex Gaussians:
h = log(πe·variance) for a scalar and log((πe)^n·det Σ) jointly.
"""

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from ..errors import EntropyRateUndefinedError, FactorizationError
from ..taps import TapProcess

if TYPE_CHECKING:
    from ..config import ChannelConfig

logger = logging.getLogger(__name__)

LOG_PI_E = math.log(math.pi * math.e)

# Conditional variances below this fraction of the noise floor mean the
# factorization has lost precision
PIVOT_FLOOR = 1e-12


def entropy_rate(tap: TapProcess) -> float:
    """
    Differential entropy rate of a stationary AR(1) tap.

    Args:
        tap: Tap process with positive variance

    Returns:
        log(πe·α·(1 − |a|²)); -inf for |a| = 1

    Raises:
        EntropyRateUndefinedError: If the tap variance is zero
    """
    if tap.variance <= 0.0:
        raise EntropyRateUndefinedError("entropy rate is undefined for a tap with zero variance")
    innovation = tap.innovation_variance
    if innovation <= 0.0:
        return -math.inf
    return math.log(math.pi * math.e * innovation)


def regularity_from_magnitude(sup_magnitude: float | None) -> float:
    """
    κ for the AR(1) family from sup_{ℓ∈𝓛} |a_ℓ|.

    An empty support set gives the infimum over nothing, which the toolkit
    pins to the IID value log(πe).
    """
    if sup_magnitude is None:
        return LOG_PI_E
    prediction_gain = 1.0 - sup_magnitude ** 2
    if prediction_gain <= 0.0:
        return -math.inf
    kappa = math.log(math.pi * math.e * prediction_gain)
    assert kappa <= LOG_PI_E, f"regularity constant {kappa} exceeds log(πe)"
    return kappa


def regularity_constant(config: "ChannelConfig") -> float:
    """
    κ = inf_{ℓ∈𝓛} (h_ℓ − log α_ℓ).

    Args:
        config: Channel configuration

    Returns:
        log(πe·(1 − sup_{ℓ∈𝓛} |a_ℓ|²)), always ≤ log(πe); -inf when some
        active path has |a_ℓ| = 1
    """
    return regularity_from_magnitude(config.taps.sup_magnitude(config.profile))


@dataclass(frozen=True)
class EntropyChain:
    """
    Chain-rule decomposition of h(Y_1^n | X = x).

    Attributes:
        conditional_variances: s_k = Var(Y_k | Y_1^{k−1}, X = x)
        terms: h_k = log(πe·s_k)
        joint: log((πe)^n·det Σ), computed independently of the terms
    """

    conditional_variances: np.ndarray
    terms: np.ndarray
    joint: float

    @property
    def total(self) -> float:
        """Σ_k h_k, equal to ``joint`` up to rounding."""
        return float(np.sum(self.terms))


def cholesky_factor(sigma: np.ndarray, noise_var: float | None = None) -> np.ndarray:
    """
    Lower Cholesky factor of one covariance or a stack of them.

    Args:
        sigma: Hermitian matrix (n, n) or batch (..., n, n)
        noise_var: Known noise floor σ²; pivots below σ²·1e−12 are rejected

    Returns:
        Lower-triangular L with Σ = L·L^H

    Raises:
        FactorizationError: If the matrix is not numerically positive definite
    """
    try:
        factor = np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError as e:
        raise FactorizationError(f"covariance is not positive definite: {e}") from e

    pivots = np.real(np.diagonal(factor, axis1=-2, axis2=-1)) ** 2
    if noise_var is not None:
        floor = noise_var * PIVOT_FLOOR
    else:
        floor = PIVOT_FLOOR * float(np.max(np.real(np.diagonal(sigma, axis1=-2, axis2=-1))))

    if not np.all(np.isfinite(pivots)) or np.any(pivots < floor):
        raise FactorizationError(
            f"conditional variance below pivot floor {floor:.3e} (min {float(np.min(pivots)):.3e})"
        )
    return factor


def schur_conditional_variances(sigma: np.ndarray, noise_var: float | None = None) -> np.ndarray:
    """
    Successive Schur complements s_k of a covariance (or a stack of them).

    The k-th squared Cholesky pivot is the variance of Y_k given Y_1^{k−1}.
    """
    factor = cholesky_factor(sigma, noise_var)
    return np.real(np.diagonal(factor, axis1=-2, axis2=-1)) ** 2


def schur_conditional_entropies(sigma: np.ndarray, noise_var: float | None = None) -> EntropyChain:
    """
    Chain of conditional entropies h(Y_k | Y_1^{k−1}, X = x).

    Args:
        sigma: Conditional covariance Σ(x), shape (n, n)
        noise_var: Noise variance σ² used as the pivot floor reference

    Returns:
        EntropyChain with per-k terms and the determinant-based joint entropy

    Raises:
        FactorizationError: If Σ is not numerically positive definite
    """
    sigma = np.asarray(sigma)
    variances = schur_conditional_variances(sigma, noise_var)
    terms = LOG_PI_E + np.log(variances)

    sign, logdet = np.linalg.slogdet(sigma)
    if abs(sign) == 0:
        raise FactorizationError("covariance determinant is zero")
    joint = sigma.shape[-1] * LOG_PI_E + float(np.real(logdet))

    return EntropyChain(conditional_variances=variances, terms=terms, joint=joint)
