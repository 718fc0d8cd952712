"""
Per-path tap process descriptors.

Every path gain is a circularly-symmetric complex Gaussian order-1
autoregression H_k = a·H_{k−1} + W_k, stationary with variance α. The
coefficient a = 0 gives a temporally IID tap.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import TapProcessError
from .profile import DecayProfile

logger = logging.getLogger(__name__)


def _as_complex(value: complex | float) -> complex:
    coefficient = complex(value)
    if not (math.isfinite(coefficient.real) and math.isfinite(coefficient.imag)):
        raise TapProcessError(f"tap coefficient must be finite, got {value!r}")
    return coefficient


@dataclass(frozen=True)
class TapProcess:
    """
    Stationary complex AR(1) path gain.

    Attributes:
        coefficient: Autoregression coefficient a with |a| ≤ 1
        variance: Stationary variance α (the profile's α_ℓ)
    """

    coefficient: complex
    variance: float

    def __post_init__(self) -> None:
        coefficient = _as_complex(self.coefficient)
        if abs(coefficient) > 1.0:
            raise TapProcessError(f"tap coefficient must satisfy |a| <= 1, got |a| = {abs(coefficient)}")
        variance = float(self.variance)
        if not (math.isfinite(variance) and variance >= 0.0):
            raise TapProcessError(f"tap variance must be finite and non-negative, got {self.variance}")
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "variance", variance)

    @property
    def innovation_variance(self) -> float:
        """Variance of W_k, α·(1 − |a|²), which is also the one-step prediction error."""
        return self.variance * (1.0 - abs(self.coefficient) ** 2)

    @property
    def is_iid(self) -> bool:
        return self.coefficient == 0


@dataclass(frozen=True)
class TapAssignment:
    """
    Maps each delay to its autoregression coefficient.

    Delays covered by ``coefficients`` use their listed value; every later
    delay uses ``default``.
    """

    coefficients: tuple[complex, ...] = ()
    default: complex = 0j

    def __post_init__(self) -> None:
        coefficients = tuple(_as_complex(value) for value in self.coefficients)
        default = _as_complex(self.default)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "default", default)

    @classmethod
    def uniform(cls, coefficient: complex | float) -> "TapAssignment":
        """Same coefficient on every path."""
        return cls(coefficients=(), default=complex(coefficient))

    def coefficient(self, ell: int) -> complex:
        if ell < len(self.coefficients):
            return self.coefficients[ell]
        return self.default

    def coefficient_array(self, count: int) -> np.ndarray:
        """a_0 … a_{count−1} as a complex array."""
        return np.array([self.coefficient(ell) for ell in range(count)], dtype=complex)

    def sup_magnitude(self, profile: DecayProfile) -> float | None:
        """
        sup over the active paths 𝓛 of |a_ℓ|.

        Args:
            profile: Profile defining which paths are active

        Returns:
            The supremum, or None when no path is active
        """
        listed = len(self.coefficients)
        horizon = max(listed, len(profile.head))
        magnitudes = [abs(self.coefficient(ell)) for ell in profile.support_set(horizon)]

        # Infinite support always reaches delays beyond the listed ones
        if not profile.has_finite_support:
            magnitudes.append(abs(self.default))

        return max(magnitudes) if magnitudes else None

    def describe(self) -> str:
        if not self.coefficients:
            return f"uniform(a={self.default!r})"
        listed = ", ".join(repr(value) for value in self.coefficients)
        return f"per-tap([{listed}], default={self.default!r})"
