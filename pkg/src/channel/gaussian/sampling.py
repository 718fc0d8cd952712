"""
Sampling of complex Gaussian variates and tap-gain paths.
"""

import logging
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from ..config import ChannelConfig

logger = logging.getLogger(__name__)

SeedLike = int | np.random.SeedSequence | np.random.Generator


def make_rng(seed: SeedLike) -> np.random.Generator:
    """Generator for a seed; an existing Generator is used as-is."""
    return np.random.default_rng(seed)


def complex_normal(rng: np.random.Generator, shape: tuple[int, ...], variance: float | np.ndarray = 1.0) -> np.ndarray:
    """
    Circularly-symmetric complex Gaussian samples CN(0, variance).

    Args:
        rng: Random generator
        shape: Output shape
        variance: Scalar or array broadcastable to shape

    Returns:
        Complex array of the requested shape
    """
    scale = np.sqrt(np.asarray(variance, dtype=float) / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def sample_tap_paths(config: "ChannelConfig", n: int, count: int, seed: SeedLike) -> np.ndarray:
    """
    Draw independent stationary realizations of every tap path.

    The time-1 state is drawn from the stationary law CN(0, α_p) and later
    states follow H_k = a_p·H_{k−1} + W_k with W_k ~ CN(0, α_p(1 − |a_p|²)),
    so every path is exactly stationary without burn-in.

    Args:
        config: Channel configuration
        n: Number of time steps (and of delays 0 … n−1)
        count: Number of independent realizations
        seed: Seed or generator

    Returns:
        Array H of shape (count, n, n) with H[c, k, p] the gain of delay p
        at time k (zero-based). Paths with α_p = 0 are identically zero.
    """
    rng = make_rng(seed)
    alphas = config.profile.alphas(n)
    coefficients = config.taps.coefficient_array(n)
    innovation = alphas * (1.0 - np.abs(coefficients) ** 2)

    paths = np.empty((count, n, n), dtype=complex)
    state = complex_normal(rng, (count, n), alphas)
    paths[:, 0, :] = state
    for k in range(1, n):
        state = coefficients * state + complex_normal(rng, (count, n), innovation)
        paths[:, k, :] = state

    logger.debug(f"Sampled {count} tap path realizations over {n} steps")
    return paths
