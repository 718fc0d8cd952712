"""
Autocovariances and the conditional output covariance.

Given the inputs x_1^n, the channel output is zero-mean complex Gaussian
with covariance

    Σ(x)_{k,j} = σ²·1{k=j} + Σ_p r_p(k−j)·x_{k−p}·conj(x_{j−p})

where the sum runs over delays reaching both k and j. Paths at different
delays are independent, so no cross-path terms appear.
"""

import logging
from typing import TYPE_CHECKING

import numpy as np
from scipy.linalg import toeplitz

from ..taps import TapProcess

if TYPE_CHECKING:
    from ..config import ChannelConfig

logger = logging.getLogger(__name__)

# Alias for readability; Σ(x) is a plain complex ndarray
CondCovariance = np.ndarray


def autocovariance(tap: TapProcess, lag: int) -> complex:
    """
    r(τ) = E[H_{k+τ}·conj(H_k)] of a tap.

    Args:
        tap: Tap process
        lag: Integer lag τ (negative lags give the conjugate)

    Returns:
        α·a^τ for τ ≥ 0, conj(r(−τ)) otherwise

    Example:
        >>> autocovariance(TapProcess(0.5, 1.0), 3)
        (0.125+0j)
    """
    if lag < 0:
        return autocovariance(tap, -lag).conjugate()
    if lag == 0:
        return complex(tap.variance)
    return tap.variance * tap.coefficient ** lag


def autocovariance_matrix(tap: TapProcess, n: int) -> np.ndarray:
    """n×n Toeplitz matrix R with R[k, j] = r(k − j)."""
    powers = np.ones(n, dtype=complex)
    if n > 1:
        powers[1:] = np.cumprod(np.full(n - 1, tap.coefficient, dtype=complex))
    column = tap.variance * powers
    return toeplitz(column, column.conj())


def shifted_inputs(x: np.ndarray, delay: int) -> np.ndarray:
    """u[..., k] = x[..., k − delay], zero where k < delay."""
    shifted = np.zeros_like(x)
    if delay == 0:
        shifted[...] = x
    elif delay < x.shape[-1]:
        shifted[..., delay:] = x[..., :-delay]
    return shifted


def output_power(config: "ChannelConfig", x: np.ndarray) -> np.ndarray:
    """
    Conditional output variances σ² + Σ_{p≤k} α_p·|x_{k−p}|².

    This is the diagonal of Σ(x) and does not depend on the tap memory.

    Args:
        config: Channel configuration
        x: Inputs, shape (n,) or (batch, n)

    Returns:
        Real array with the same shape as x
    """
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    alphas = config.profile.alphas(n)
    power = np.full(x.shape, config.noise_var, dtype=float)
    magnitudes = np.abs(x) ** 2
    for delay in range(n):
        if alphas[delay] > 0.0:
            power += alphas[delay] * shifted_inputs(magnitudes, delay)
    return power


def conditional_cov(config: "ChannelConfig", x: np.ndarray) -> CondCovariance:
    """
    Covariance of Y_1^n given X_1^n = x.

    Args:
        config: Channel configuration
        x: Inputs, shape (n,) or a batch (batch, n)

    Returns:
        Hermitian matrix (n, n), or a stack (batch, n, n)

    With IID taps and x = (1, 1) this is diag(σ² + α₀, σ² + α₀ + α₁).
    """
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    alphas = config.profile.alphas(n)

    sigma = np.zeros(x.shape[:-1] + (n, n), dtype=complex)
    for delay in range(n):
        if alphas[delay] <= 0.0:
            continue
        tap = TapProcess(config.taps.coefficient(delay), alphas[delay])
        u = shifted_inputs(x, delay)
        sigma += autocovariance_matrix(tap, n) * (u[..., :, None] * u[..., None, :].conj())

    sigma += config.noise_var * np.eye(n)

    if logger.isEnabledFor(logging.DEBUG):
        smallest = float(np.min(np.linalg.eigvalsh(sigma)))
        if smallest < -1e-9 * config.noise_var:
            logger.warning(f"Conditional covariance is not PSD: smallest eigenvalue {smallest:.3e}")

    return sigma
