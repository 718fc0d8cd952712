"""
Channel simulation.

``simulate_channel`` realizes the tapped delay line with sampled tap
paths and noise. ``draw_joint`` draws (X, Y) pairs straight from the
conditional Gaussian law Y | X = x ~ CN(0, Σ(x)), keeping the Cholesky
factor and the whitened noise so estimators can evaluate exact
conditional densities.
"""

import logging
from dataclasses import dataclass

import numpy as np

from channel import ChannelConfig
from channel.gaussian import (
    SeedLike,
    cholesky_factor,
    complex_normal,
    conditional_cov,
    make_rng,
    sample_tap_paths,
    shifted_inputs,
)

from .inputs import InputModel

logger = logging.getLogger(__name__)


def simulate_channel(config: ChannelConfig, x: np.ndarray, seed: SeedLike, trials: int = 1) -> np.ndarray:
    """
    Pass inputs through the channel.

    Y_k = Σ_{p=0}^{k} H_k^{(p)}·x_{k−p} + Z_k with independently sampled
    stationary tap paths and CN(0, σ²) noise per trial.

    Args:
        config: Channel configuration
        x: Inputs, shape (n,) shared by all trials or (trials, n)
        seed: Seed or generator
        trials: Number of independent channel realizations

    Returns:
        Outputs of shape (trials, n)
    """
    rng = make_rng(seed)
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    if x.ndim == 2 and x.shape[0] != trials:
        raise ValueError(f"got {x.shape[0]} input rows for {trials} trials")

    paths = sample_tap_paths(config, n, trials, rng)
    noise = complex_normal(rng, (trials, n), config.noise_var)

    y = noise.copy()
    for delay in range(n):
        y += paths[:, :, delay] * shifted_inputs(np.broadcast_to(x, (trials, n)), delay)
    return y


@dataclass(frozen=True)
class JointSample:
    """
    (X, Y) draws with the conditional factorization.

    Attributes:
        x: Inputs (count, n)
        factor: Lower Cholesky factor of Σ(x) per draw (count, n, n)
        whitened: w with y = factor·w, w ~ CN(0, I) (count, n)
        y: Outputs (count, n)
    """

    x: np.ndarray
    factor: np.ndarray
    whitened: np.ndarray
    y: np.ndarray

    def conditional_log_densities(self) -> np.ndarray:
        """
        log f(y_k | x, y_1^{k−1}) per draw and time (count, n).

        With y = L·w the k-th conditional is CN(·, L_kk²), and its log density
        at the draw is −log π − 2·log L_kk − |w_k|².
        """
        pivots = np.real(np.diagonal(self.factor, axis1=-2, axis2=-1))
        return -np.log(np.pi) - 2.0 * np.log(pivots) - np.abs(self.whitened) ** 2

    @property
    def conditional_variances(self) -> np.ndarray:
        """s_k(x) = Var(Y_k | Y_1^{k−1}, X = x) per draw (count, n)."""
        return np.real(np.diagonal(self.factor, axis1=-2, axis2=-1)) ** 2


def draw_joint(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    count: int,
    rng: np.random.Generator,
) -> JointSample:
    """
    Draw inputs from Q and outputs from the exact conditional law.

    Args:
        config: Channel configuration (power taken from it)
        input_model: Per-symbol input law
        n: Blocklength
        count: Number of draws
        rng: Random generator

    Returns:
        JointSample of ``count`` draws
    """
    x = input_model.sample(rng, (count, n), config.power)
    factor = cholesky_factor(conditional_cov(config, x), config.noise_var)
    whitened = complex_normal(rng, (count, n))
    y = np.einsum("cij,cj->ci", factor, whitened)
    return JointSample(x=x, factor=factor, whitened=whitened, y=y)
