"""
Power-delay profiles with analytic tails.

A profile is a finite head α_0 … α_m followed by a closed-form tail model,
so that every α_ℓ is computable and the limit conditions used for decay
classification are decided analytically rather than from a truncated
sequence.

Double-exponential tails are evaluated through their exponent so that they
underflow to exactly 0.0 instead of overflowing.
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ProfileError

logger = logging.getLogger(__name__)

# exp() of anything above this overflows a double
_MAX_EXPONENT = 709.0


def _exp_neg_exp(log_exponent: float) -> float:
    """exp(−exp(t)), returning 0.0 instead of overflowing for large t."""
    if log_exponent > _MAX_EXPONENT:
        return 0.0
    return math.exp(-math.exp(log_exponent))


class DecayClass(str, Enum):
    """Capacity regime implied by a power-delay profile."""

    BOUNDED = "Bounded"
    UNBOUNDED = "Unbounded"
    INDETERMINATE = "Indeterminate"


class TailModel(ABC):
    """Base class for the analytic part of a profile beyond the head."""

    kind: str = "tail"

    @abstractmethod
    def value(self, ell: int, head: tuple[float, ...]) -> float:
        """
        α_ℓ for an index past the head.

        Args:
            ell: Delay index, strictly greater than the last head index
            head: The profile head (some tails anchor on its last entry)

        Returns:
            α_ℓ, underflowing to 0.0 far out in the tail
        """
        pass

    @abstractmethod
    def ratio_liminf(self) -> float:
        """liminf of α_{ℓ+1}/α_ℓ with the conventions a/0 = ∞ and 0/0 = 0."""
        pass

    @abstractmethod
    def loglog_rate(self) -> float:
        """Limit of (1/ℓ)·log log(1/α_ℓ) as ℓ → ∞ (may be +inf)."""
        pass

    def validate(self, head: tuple[float, ...]) -> None:
        """Reject parameter combinations the model cannot represent."""
        return None

    def scaled(self, factor: float) -> "TailModel":
        """Tail of the profile c·α (anchored tails follow the head automatically)."""
        return self

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class ZeroTail(TailModel):
    """α_ℓ = 0 past the head: a finite-memory channel."""

    kind = "zero"

    def value(self, ell: int, head: tuple[float, ...]) -> float:
        return 0.0

    def ratio_liminf(self) -> float:
        return 0.0

    def loglog_rate(self) -> float:
        return math.inf


@dataclass(frozen=True)
class GeometricTail(TailModel):
    """α_ℓ = α_m · r^(ℓ−m), anchored at the last head entry."""

    ratio: float
    kind = "geometric"

    def __post_init__(self) -> None:
        if not (0.0 < self.ratio < 1.0):
            raise ProfileError(f"geometric ratio must lie in (0, 1), got {self.ratio}")

    def validate(self, head: tuple[float, ...]) -> None:
        if head[-1] <= 0.0:
            raise ProfileError(
                "geometric tail must be anchored at a positive last head value, "
                f"got α_{len(head) - 1} = {head[-1]}"
            )

    def value(self, ell: int, head: tuple[float, ...]) -> float:
        return head[-1] * self.ratio ** (ell - (len(head) - 1))

    def ratio_liminf(self) -> float:
        return self.ratio

    def loglog_rate(self) -> float:
        # log log(1/α_ℓ) grows like log ℓ
        return 0.0

    def describe(self) -> str:
        return f"geometric(r={self.ratio!r})"


@dataclass(frozen=True)
class DoubleExpTail(TailModel):
    """α_ℓ = scale · exp(−b·c^ℓ)."""

    b: float
    c: float
    scale: float = 1.0
    kind = "doubleexp"

    def __post_init__(self) -> None:
        if not self.b > 0.0:
            raise ProfileError(f"double-exponential b must be positive, got {self.b}")
        if not self.c > 1.0:
            raise ProfileError(f"double-exponential c must exceed 1, got {self.c}")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ProfileError(f"tail scale must be positive and finite, got {self.scale}")

    def value(self, ell: int, head: tuple[float, ...]) -> float:
        return self.scale * _exp_neg_exp(math.log(self.b) + ell * math.log(self.c))

    def ratio_liminf(self) -> float:
        return 0.0

    def loglog_rate(self) -> float:
        return math.log(self.c)

    def scaled(self, factor: float) -> "DoubleExpTail":
        return DoubleExpTail(b=self.b, c=self.c, scale=self.scale * factor)

    def describe(self) -> str:
        return f"doubleexp(b={self.b!r}, c={self.c!r})"


@dataclass(frozen=True)
class SuperDoubleExpTail(TailModel):
    """α_ℓ = scale · exp(−exp(β·ℓ²))."""

    beta: float
    scale: float = 1.0
    kind = "superdoubleexp"

    def __post_init__(self) -> None:
        if not self.beta > 0.0:
            raise ProfileError(f"super-double-exponential β must be positive, got {self.beta}")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ProfileError(f"tail scale must be positive and finite, got {self.scale}")

    def value(self, ell: int, head: tuple[float, ...]) -> float:
        return self.scale * _exp_neg_exp(self.beta * float(ell) ** 2)

    def ratio_liminf(self) -> float:
        return 0.0

    def loglog_rate(self) -> float:
        return math.inf

    def scaled(self, factor: float) -> "SuperDoubleExpTail":
        return SuperDoubleExpTail(beta=self.beta, scale=self.scale * factor)

    def describe(self) -> str:
        return f"superdoubleexp(beta={self.beta!r})"


@dataclass(frozen=True)
class DecayProfile:
    """
    Power-delay profile {α_ℓ}: explicit head plus analytic tail.

    Attributes:
        head: α_0 … α_m, non-negative and finite
        tail: Model for α_ℓ with ℓ > m
    """

    head: tuple[float, ...]
    tail: TailModel = field(default_factory=ZeroTail)

    def __post_init__(self) -> None:
        head = tuple(float(value) for value in self.head)
        if not head:
            raise ProfileError("profile head must contain at least one value")
        for index, value in enumerate(head):
            if math.isnan(value) or math.isinf(value):
                raise ProfileError(f"α_{index} must be finite, got {value}")
            if value < 0.0:
                raise ProfileError(f"α_{index} must be non-negative, got {value}")
        object.__setattr__(self, "head", head)
        self.tail.validate(head)

    @property
    def last_head_index(self) -> int:
        """m, the index of the last explicit head value."""
        return len(self.head) - 1

    def alpha(self, ell: int) -> float:
        """
        Path-gain variance α_ℓ.

        Raises:
            ProfileError: If ell is negative
        """
        if ell < 0:
            raise ProfileError(f"delay index must be non-negative, got {ell}")
        if ell < len(self.head):
            return self.head[ell]
        return self.tail.value(ell, self.head)

    def alphas(self, count: int) -> np.ndarray:
        """α_0 … α_{count−1} as a float array."""
        return np.array([self.alpha(ell) for ell in range(count)], dtype=float)

    @property
    def has_finite_support(self) -> bool:
        return isinstance(self.tail, ZeroTail)

    def sup_alpha(self) -> float:
        """
        sup_ℓ α_ℓ.

        Every tail model is non-increasing past the head, so the supremum is
        attained on the head or at the first tail index.
        """
        return max(max(self.head), self.alpha(len(self.head)))

    def support_set(self, horizon: int) -> tuple[int, ...]:
        """Indices ℓ < horizon with α_ℓ > 0."""
        return tuple(ell for ell in range(horizon) if self.alpha(ell) > 0.0)

    def scaled(self, factor: float) -> "DecayProfile":
        """
        The profile c·α_ℓ.

        Raises:
            ProfileError: If the factor is not positive and finite
        """
        if not (factor > 0.0 and math.isfinite(factor)):
            raise ProfileError(f"scale factor must be positive and finite, got {factor}")
        return DecayProfile(
            head=tuple(value * factor for value in self.head),
            tail=self.tail.scaled(factor),
        )

    def describe(self) -> str:
        head = ", ".join(repr(value) for value in self.head)
        return f"head=[{head}] tail={self.tail.describe()}"


def alpha_at(profile: DecayProfile, ell: int) -> float:
    """
    Evaluate α_ℓ for a profile.

    Args:
        profile: Power-delay profile
        ell: Delay index ℓ ≥ 0

    Returns:
        Head value for ℓ ≤ m, tail-model value beyond

    Example:
        >>> alpha_at(DecayProfile((1.0, 0.5), GeometricTail(0.5)), 4)
        0.0625
    """
    return profile.alpha(ell)


def sup_alpha(profile: DecayProfile) -> float:
    """sup_ℓ α_ℓ of a profile."""
    return profile.sup_alpha()


def support_set(profile: DecayProfile, horizon: int) -> tuple[int, ...]:
    """Active paths 𝓛 ∩ [0, horizon)."""
    return profile.support_set(horizon)


def finite_memory_length(profile: DecayProfile) -> int | None:
    """
    Largest ℓ with α_ℓ > 0 for a finite-memory profile.

    Returns:
        The memory length L, or None when the tail never vanishes (or
        every α_ℓ is zero)
    """
    if not profile.has_finite_support:
        return None
    active = profile.support_set(len(profile.head))
    return active[-1] if active else None


def classify_decay(profile: DecayProfile) -> DecayClass:
    """
    Classify a profile by its tail decay.

    Bounded when liminf α_{ℓ+1}/α_ℓ > 0 (conventions a/0 = ∞, 0/0 = 0),
    Unbounded when (1/ℓ)·log log(1/α_ℓ) → ∞, Indeterminate otherwise.
    Both conditions are properties of the tail, so the head never changes
    the class.

    Args:
        profile: Power-delay profile

    Returns:
        The decay class
    """
    tail = profile.tail
    if tail.ratio_liminf() > 0.0:
        decay_class = DecayClass.BOUNDED
    elif math.isinf(tail.loglog_rate()):
        decay_class = DecayClass.UNBOUNDED
    else:
        decay_class = DecayClass.INDETERMINATE

    logger.debug(f"Classified {profile.describe()} as {decay_class.value}")
    return decay_class
