"""
Finite-blocklength capacity bounds.

The first ℓ₀ chain-rule terms and the ℓ₀ boundary terms of the
telescoping split are each bounded by log(1 + sup α·n·SNR); the remaining
terms by K.
"""

import logging
import math
from typing import TYPE_CHECKING

from channel import ChannelConfig

from .errors import BlocklengthTooShortError, BoundParameterError

if TYPE_CHECKING:
    from .constant import BoundResult

logger = logging.getLogger(__name__)


def first_terms_bound(config: ChannelConfig, n: int) -> float:
    """
    log(1 + sup α·n·SNR), a bound on any single I(X_1^n; Y_k | Y_1^{k−1}).

    With sup α = 1, n = 10 and SNR = 10 this is log(101) ≈ 4.6151.
    """
    if n < 1:
        raise BoundParameterError(f"blocklength must be at least 1, got {n}")
    return math.log1p(config.profile.sup_alpha() * n * config.snr)


def per_k_firstl_bound(config: ChannelConfig, k: int) -> float:
    """
    Gaussian maximum-entropy bound on the k-th chain-rule term.

    log(1 + Σ_{ℓ≤k} α_{k−ℓ}·E|X_ℓ|²/σ²) for inputs with per-symbol power P,
    which sits between the k-th term and first_terms_bound.

    Args:
        config: Channel configuration
        k: One-based time index

    Returns:
        The bound in nats
    """
    if k < 1:
        raise BoundParameterError(f"time index must be at least 1, got {k}")
    gain = sum(config.profile.alpha(delay) for delay in range(k))
    return math.log1p(gain * config.snr)


def finite_n_bound(
    K: float,
    ell0: int,
    sup_alpha: float,
    n: int,
    snr: float,
    chain_rule: bool = False,
) -> float:
    """
    Upper bound on (1/n)·I(X_1^n; Y_1^n).

        (2ℓ₀/n)·log(1 + sup α·n·SNR) + ((n − 2ℓ₀)/n)·K

    With ``chain_rule=True`` the K weight is (n − ℓ₀)/n, one K per
    chain-rule term k = ℓ₀+1 … n.

    Raises:
        BlocklengthTooShortError: If n ≤ 2ℓ₀
    """
    if n <= 2 * ell0:
        raise BlocklengthTooShortError(f"blocklength {n} must exceed 2ℓ₀ = {2 * ell0}")
    boundary = (2 * ell0 / n) * math.log1p(sup_alpha * n * snr)
    bulk_terms = n - ell0 if chain_rule else n - 2 * ell0
    return boundary + (bulk_terms / n) * K


def finite_n_capacity_bound(
    config: ChannelConfig,
    n: int,
    result: "BoundResult",
    chain_rule: bool = False,
) -> float:
    """
    Finite-n bound for a configured channel at its SNR.

    Args:
        config: Channel configuration (SNR and sup α are taken from it)
        n: Blocklength, n > 2ℓ₀
        result: Evaluated bound
        chain_rule: Use the (n − ℓ₀)/n weight on K

    Returns:
        Bound in nats per channel use
    """
    value = finite_n_bound(
        result.K, result.params.ell0, config.profile.sup_alpha(), n, config.snr, chain_rule=chain_rule
    )
    logger.debug(f"Finite-n bound n={n}, SNR={config.snr:.6g}: {value:.6f}")
    return value
