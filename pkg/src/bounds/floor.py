"""
Geometric floor detection and the contraction factor β̃.

For a Bounded profile there is a delay ℓ₀ ≥ 1 from which every
consecutive ratio α_{ℓ+1}/α_ℓ stays above some ρ ∈ (0, 1). From (ℓ₀, ρ)
the factor β̃ is built so that β̃·α_ℓ ≤ α_{ℓ+ℓ₀} for every ℓ.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from channel import DecayClass, DecayProfile, classify_decay

from .errors import BoundParameterError, InternalConsistencyError

logger = logging.getLogger(__name__)

RHO_CAP = 1.0 - 1e-9
DEFAULT_HORIZON = 500
RELATIVE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GeometricFloor:
    """Delay ℓ₀ and ratio floor ρ of a Bounded profile."""

    ell0: int
    rho: float

    def to_dict(self) -> dict:
        return {"ell0": self.ell0, "rho": self.rho}


def _head_ratio(numerator: float, denominator: float) -> float:
    # a/0 = ∞ and 0/0 = 0
    if denominator == 0.0:
        return 0.0 if numerator == 0.0 else math.inf
    return numerator / denominator


def detect_geometric_floor(profile: DecayProfile) -> GeometricFloor | None:
    """
    Find (ℓ₀, ρ) for a Bounded profile.

    ℓ₀ is the smallest delay ≥ 1 with α_{ℓ₀} > 0 from which no ratio
    α_{ℓ+1}/α_ℓ drops to zero; ρ is the infimum of those ratios (head
    ratios evaluated numerically, the tail ratio analytically) capped at
    1 − 1e−9.

    Args:
        profile: Power-delay profile

    Returns:
        The floor, or None when the profile is not Bounded

    Example:
        >>> detect_geometric_floor(DecayProfile((1.0, 0.0, 1.0), GeometricTail(0.9)))
        GeometricFloor(ell0=2, rho=0.9)
    """
    if classify_decay(profile) is not DecayClass.BOUNDED:
        return None

    head = profile.head
    zero_indices = [index for index, value in enumerate(head) if value == 0.0]
    ell0 = zero_indices[-1] + 1 if zero_indices else 1

    # Bounded tails are anchored on a positive last head value, so every
    # α_ℓ from ℓ₀ on is positive
    ratios = [
        _head_ratio(profile.alpha(ell + 1), profile.alpha(ell))
        for ell in range(ell0, len(head) - 1)
    ]
    ratios.append(profile.tail.ratio_liminf())

    rho = min(min(ratios), RHO_CAP)
    if not rho > 0.0:
        return None

    floor = GeometricFloor(ell0=ell0, rho=rho)
    logger.debug(f"Geometric floor for {profile.describe()}: ℓ₀={ell0}, ρ={rho}")
    return floor


def compute_beta_tilde(
    profile: DecayProfile,
    ell0: int,
    rho: float,
    horizon: int = DEFAULT_HORIZON,
) -> float:
    """
    Contraction factor β̃ linking delay ℓ to delay ℓ + ℓ₀.

    β̃ = min{ρ^(ℓ₀−1)·α_{ℓ₀}/max_{ℓ'≤ℓ₀} α_{ℓ'}, α_{ℓ₀}, ρ^ℓ₀}

    Args:
        profile: Bounded power-delay profile
        ell0: Floor delay ℓ₀ ≥ 1
        rho: Ratio floor ρ ∈ (0, 1)
        horizon: Delays checked explicitly before the tail analytics take over

    Returns:
        β̃ ∈ (0, 1) with β̃·α_ℓ ≤ α_{ℓ+ℓ₀} for all ℓ

    Raises:
        BoundParameterError: If ℓ₀ or ρ are out of range
        InternalConsistencyError: If the constructed β̃ violates its
            defining inequality
    """
    if ell0 < 1:
        raise BoundParameterError(f"ℓ₀ must be at least 1, got {ell0}")
    if not (0.0 < rho < 1.0):
        raise BoundParameterError(f"ρ must lie in (0, 1), got {rho}")

    alpha_floor = profile.alpha(ell0)
    if alpha_floor <= 0.0:
        raise BoundParameterError(f"α_ℓ₀ must be positive, got α_{ell0} = {alpha_floor}")

    peak = max(profile.alpha(ell) for ell in range(ell0 + 1))
    terms = (rho ** (ell0 - 1) * alpha_floor / peak, alpha_floor, rho ** ell0)
    beta_tilde = min(terms)

    _check_beta_tilde(profile, ell0, beta_tilde, horizon)
    logger.debug(f"β̃ = min{terms} = {beta_tilde}")
    return beta_tilde


def _check_beta_tilde(profile: DecayProfile, ell0: int, beta_tilde: float, horizon: int) -> None:
    if not (0.0 < beta_tilde < 1.0):
        raise InternalConsistencyError(f"β̃ must lie in (0, 1), got {beta_tilde}")

    alphas = profile.alphas(horizon + ell0 + 1)
    base = alphas[: horizon + 1]
    shifted = alphas[ell0 : horizon + ell0 + 1]

    # Pairs where the shifted value underflowed are covered by the tail check
    tiny = np.finfo(float).tiny
    checked = shifted >= tiny
    violations = checked & (beta_tilde * base > shifted * (1.0 + RELATIVE_TOLERANCE))
    if np.any(violations):
        ell = int(np.argmax(violations))
        raise InternalConsistencyError(
            f"β̃·α_{ell} = {beta_tilde * base[ell]} exceeds α_{ell + ell0} = {shifted[ell]}"
        )

    # Past the head the tail ratio is constant, so α_{ℓ+ℓ₀}/α_ℓ = r^ℓ₀
    tail_ratio = profile.tail.ratio_liminf() ** ell0
    if beta_tilde > tail_ratio * (1.0 + RELATIVE_TOLERANCE):
        raise InternalConsistencyError(
            f"β̃ = {beta_tilde} exceeds the tail contraction {tail_ratio}"
        )
