"""
The SNR-independent constant K and its optimization over (δ, η).

    K = −(1 + 2/η)·κ + log(2π²/(β̃·δ²)) + 2·ε(δ, η) + (2/η)·(2/e + log(πe))

K upper-bounds every chain-rule term I(X_1^n; Y_k | Y_1^{k−1}) with
k > ℓ₀ once the boundary terms are split off, whatever the SNR.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

from channel import ChannelConfig, DecayProfile, classify_decay
from channel.gaussian import LOG_PI_E, regularity_constant
from utils.tracing import trace_function

from .epsilon import EpsilonTerm, MissingEpsilon, SmallBallEpsilon, check_delta_eta
from .errors import BoundParameterError, EmptyGridError, NoGeometricFloorError
from .finite_n import finite_n_bound
from .floor import DEFAULT_HORIZON, compute_beta_tilde, detect_geometric_floor

logger = logging.getLogger(__name__)

DEFAULT_DELTAS = (0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
DEFAULT_ETAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class BoundParams:
    """
    Parameters feeding K.

    Attributes:
        ell0: Floor delay ℓ₀ ≥ 1
        rho: Ratio floor ρ ∈ (0, 1)
        beta_tilde: Contraction factor β̃ ∈ (0, 1)
        delta: Split radius δ ∈ (0, 1]
        eta: Entropy weight η ∈ (0, 1)
        epsilon: ε(δ, η) provider
    """

    ell0: int
    rho: float
    beta_tilde: float
    delta: float = 0.5
    eta: float = 0.5
    epsilon: EpsilonTerm = field(default_factory=SmallBallEpsilon)

    def __post_init__(self) -> None:
        if self.ell0 < 1:
            raise BoundParameterError(f"ℓ₀ must be at least 1, got {self.ell0}")
        if not (0.0 < self.rho < 1.0):
            raise BoundParameterError(f"ρ must lie in (0, 1), got {self.rho}")
        if not (0.0 < self.beta_tilde < 1.0):
            raise BoundParameterError(f"β̃ must lie in (0, 1), got {self.beta_tilde}")
        check_delta_eta(self.delta, self.eta)

    @property
    def epsilon_value(self) -> float:
        return self.epsilon(self.delta, self.eta)

    @property
    def has_epsilon(self) -> bool:
        return not isinstance(self.epsilon, MissingEpsilon)

    def to_dict(self) -> dict:
        return {
            "ell0": self.ell0,
            "rho": self.rho,
            "beta_tilde": self.beta_tilde,
            "delta": self.delta,
            "eta": self.eta,
            "epsilon": self.epsilon_value if self.has_epsilon else None,
            "epsilon_source": self.epsilon.describe(),
        }


@dataclass(frozen=True)
class BoundResult:
    """
    Evaluated bound for one profile.

    Attributes:
        K: The constant in nats
        params: Parameters at which K was evaluated
        kappa: Regularity constant κ used
        sup_alpha: sup_ℓ α_ℓ of the profile
    """

    K: float
    params: BoundParams
    kappa: float
    sup_alpha: float

    def finite_n(self, n: int, snr: float, chain_rule: bool = False) -> float:
        """Finite-n bound in nats per channel use (see finite_n_bound)."""
        return finite_n_bound(self.K, self.params.ell0, self.sup_alpha, n, snr, chain_rule=chain_rule)

    def to_dict(self) -> dict:
        result = {"K": self.K, "kappa": self.kappa, "sup_alpha": self.sup_alpha}
        result.update(self.params.to_dict())
        return result


def compute_K(kappa: float, beta_tilde: float, delta: float, eta: float, epsilon: EpsilonTerm) -> float:
    """
    Evaluate K.

    Args:
        kappa: Regularity constant κ (finite)
        beta_tilde: Contraction factor β̃ ∈ (0, 1)
        delta: Split radius δ ∈ (0, 1]
        eta: Entropy weight η ∈ (0, 1)
        epsilon: ε(δ, η) provider

    Returns:
        K in nats

    Raises:
        BoundParameterError: If any parameter is out of range
    """
    if not math.isfinite(kappa):
        raise BoundParameterError(f"κ must be finite, got {kappa}")
    if not (0.0 < beta_tilde < 1.0):
        raise BoundParameterError(f"β̃ must lie in (0, 1), got {beta_tilde}")
    check_delta_eta(delta, eta)

    return (
        -(1.0 + 2.0 / eta) * kappa
        + math.log(2.0 * math.pi ** 2 / (beta_tilde * delta ** 2))
        + 2.0 * epsilon(delta, eta)
        + (2.0 / eta) * (2.0 / math.e + LOG_PI_E)
    )


@dataclass(frozen=True)
class GridSpec:
    """(δ, η) grid for optimize_K; points are visited in sorted order."""

    deltas: tuple[float, ...] = DEFAULT_DELTAS
    etas: tuple[float, ...] = DEFAULT_ETAS

    def __post_init__(self) -> None:
        deltas = tuple(sorted(float(d) for d in self.deltas))
        etas = tuple(sorted(float(e) for e in self.etas))
        for delta in deltas:
            for eta in etas:
                check_delta_eta(delta, eta)
        object.__setattr__(self, "deltas", deltas)
        object.__setattr__(self, "etas", etas)

    @classmethod
    def from_lists(cls, deltas: Sequence[float], etas: Sequence[float]) -> "GridSpec":
        return cls(deltas=tuple(deltas), etas=tuple(etas))

    def __len__(self) -> int:
        return len(self.deltas) * len(self.etas)


@dataclass(frozen=True)
class OptimizedK:
    delta: float
    eta: float
    K: float


def optimize_K(kappa: float, beta_tilde: float, epsilon: EpsilonTerm, grid: GridSpec) -> OptimizedK:
    """
    Minimize K over a (δ, η) grid.

    Ties keep the smallest δ, then the smallest η.

    Args:
        kappa: Regularity constant κ
        beta_tilde: Contraction factor β̃
        epsilon: ε(δ, η) provider
        grid: Candidate points

    Returns:
        The minimizing (δ*, η*, K*)

    Raises:
        EmptyGridError: If the grid has no points
    """
    if len(grid) == 0:
        raise EmptyGridError("optimization grid for (δ, η) is empty")

    best: OptimizedK | None = None
    for delta in grid.deltas:
        for eta in grid.etas:
            value = compute_K(kappa, beta_tilde, delta, eta, epsilon)
            if best is None or value < best.K:
                best = OptimizedK(delta=delta, eta=eta, K=value)

    assert best is not None
    logger.debug(f"optimize_K over {len(grid)} points: δ*={best.delta}, η*={best.eta}, K*={best.K:.6f}")
    return best


@trace_function("bounds.evaluate", component="bounds")
def evaluate_bound(
    config: ChannelConfig,
    grid: GridSpec | None = None,
    epsilon: EpsilonTerm | None = None,
    horizon: int = DEFAULT_HORIZON,
) -> BoundResult:
    """
    Full bound pipeline for a channel: floor, β̃, κ and optimized K.

    Args:
        config: Validated channel configuration
        grid: (δ, η) grid (default grid when None)
        epsilon: ε provider (small-ball term when None)
        horizon: Delays checked explicitly for β̃

    Returns:
        BoundResult at the grid minimizer

    Raises:
        NoGeometricFloorError: If the profile is not Bounded
        BoundParameterError: If κ = −∞
    """
    grid = grid or GridSpec()
    epsilon = epsilon or SmallBallEpsilon()
    profile: DecayProfile = config.profile

    floor = detect_geometric_floor(profile)
    if floor is None:
        raise NoGeometricFloorError(classify_decay(profile).value, profile.describe())

    beta_tilde = compute_beta_tilde(profile, floor.ell0, floor.rho, horizon=horizon)
    kappa = regularity_constant(config)
    best = optimize_K(kappa, beta_tilde, epsilon, grid)

    params = BoundParams(
        ell0=floor.ell0,
        rho=floor.rho,
        beta_tilde=beta_tilde,
        delta=best.delta,
        eta=best.eta,
        epsilon=epsilon,
    )
    result = BoundResult(K=best.K, params=params, kappa=kappa, sup_alpha=profile.sup_alpha())

    logger.info(
        f"Bound for {profile.describe()}: K={result.K:.6f} "
        f"(ℓ₀={floor.ell0}, ρ={floor.rho}, β̃={beta_tilde:.6g}, δ*={best.delta}, η*={best.eta}, "
        f"ε={epsilon.describe()})"
    )
    return result


def fixed_bound_params(
    config: ChannelConfig,
    delta: float = 0.5,
    eta: float = 0.5,
    epsilon: EpsilonTerm | None = None,
    horizon: int = DEFAULT_HORIZON,
) -> BoundParams:
    """
    BoundParams at a given (δ, η) without optimizing K.

    Used by the proof-chain audit, which needs ℓ₀ and β̃ even when no ε
    is available.

    Raises:
        NoGeometricFloorError: If the profile is not Bounded
    """
    profile: DecayProfile = config.profile
    floor = detect_geometric_floor(profile)
    if floor is None:
        raise NoGeometricFloorError(classify_decay(profile).value, profile.describe())
    beta_tilde = compute_beta_tilde(profile, floor.ell0, floor.rho, horizon=horizon)
    return BoundParams(
        ell0=floor.ell0,
        rho=floor.rho,
        beta_tilde=beta_tilde,
        delta=delta,
        eta=eta,
        epsilon=epsilon if epsilon is not None else SmallBallEpsilon(),
    )
