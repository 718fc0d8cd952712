"""
Telescoping split of the chain-rule remainder.

For sequences indexed k = 1 … n,

    Σ_{k=ℓ₀+1}^{n} (a_k − b_k)
        = Σ_{k=n−ℓ₀+1}^{n} (a_k − b_{k−n+2ℓ₀}) + Σ_{k=ℓ₀+1}^{n−ℓ₀} (a_k − b_{k+ℓ₀})

Arrays passed in here are zero-based: ``a[k − 1]`` holds a_k.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from channel import ChannelConfig
from channel.gaussian import output_power

from .errors import TelescopingIndexError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TelescopingSplit:
    boundary: float
    bulk: float

    @property
    def total(self) -> float:
        return self.boundary + self.bulk


def telescoping_split(a: Sequence[float], b: Sequence[float], ell0: int, n: int) -> TelescopingSplit:
    """
    Split Σ_{k=ℓ₀+1}^{n} (a_k − b_k) into boundary and bulk sums.

    Args:
        a: a_1 … a_n (zero-based storage, at least n entries)
        b: b_1 … b_n (zero-based storage, at least n entries)
        ell0: Shift ℓ₀ ≥ 0
        n: Number of terms, n ≥ 2ℓ₀

    Returns:
        The boundary and bulk sums; ℓ₀ = 0 leaves the boundary empty

    Raises:
        TelescopingIndexError: If the indices fall outside the sequences
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if ell0 < 0:
        raise TelescopingIndexError(f"ℓ₀ must be non-negative, got {ell0}")
    if n < 2 * ell0:
        raise TelescopingIndexError(f"n = {n} must be at least 2ℓ₀ = {2 * ell0}")
    if len(a) < n or len(b) < n:
        raise TelescopingIndexError(f"sequences must hold at least {n} terms (got {len(a)} and {len(b)})")

    boundary = sum(a[k - 1] - b[k - n + 2 * ell0 - 1] for k in range(n - ell0 + 1, n + 1))
    bulk = sum(a[k - 1] - b[k + ell0 - 1] for k in range(ell0 + 1, n - ell0 + 1))
    return TelescopingSplit(boundary=float(boundary), bulk=float(bulk))


def log_power_sequences(config: ChannelConfig, x_samples: np.ndarray, ell0: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Sample means of the log output powers appearing in the bound.

        a_k = E[log(σ² + Σ_{ℓ=1}^{k} α_{k−ℓ}|X_ℓ|²)]
        b_k = E[log(σ² + Σ_{ℓ=1}^{k−ℓ₀} α_{k−ℓ₀−ℓ}|X_ℓ|²)]

    b_k is a_{k−ℓ₀} (log σ² when k ≤ ℓ₀), taken from the same array so
    that b_{k+ℓ₀} − a_k is exactly zero.

    Args:
        config: Channel configuration
        x_samples: Input samples, shape (samples, n)
        ell0: Shift ℓ₀ ≥ 0

    Returns:
        (a, b), zero-based arrays of length n
    """
    x_samples = np.atleast_2d(np.asarray(x_samples, dtype=complex))
    a = np.mean(np.log(output_power(config, x_samples)), axis=0)
    n = a.shape[0]

    b = np.full(n, np.log(config.noise_var))
    if ell0 < n:
        b[ell0:] = a[: n - ell0]
    return a, b
