"""
Input distributions Q for the channel.

Every model is IID across time and scaled so that E|X_k|² = P exactly.
Finite-alphabet models expose their alphabet for exact-mixture estimation.
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from channel.gaussian import complex_normal

from .errors import EstimationError, NotFiniteAlphabetError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Alphabet:
    """Finite symbol set with probabilities (zero-probability points removed)."""

    points: np.ndarray
    probabilities: np.ndarray

    def __len__(self) -> int:
        return int(self.points.shape[0])

    @property
    def log_probabilities(self) -> np.ndarray:
        return np.log(self.probabilities)

    def second_moment(self) -> float:
        return float(np.sum(self.probabilities * np.abs(self.points) ** 2))


class InputModel(ABC):
    """Base class for per-symbol input laws."""

    name: str = "input"

    @property
    def is_finite(self) -> bool:
        return True

    @abstractmethod
    def _points(self, power: float) -> tuple[np.ndarray, np.ndarray]:
        """Raw (points, probabilities) at average power P > 0."""
        pass

    def alphabet(self, power: float) -> Alphabet:
        """
        Symbol alphabet at average power P.

        At P = 0 every model collapses to the single atom x = 0.

        Raises:
            NotFiniteAlphabetError: For continuous input laws
        """
        if not self.is_finite:
            raise NotFiniteAlphabetError(f"{self.describe()} has no finite alphabet")
        if power < 0.0:
            raise EstimationError(f"input power must be non-negative, got {power}")
        if power == 0.0:
            return Alphabet(points=np.zeros(1, dtype=complex), probabilities=np.ones(1))

        points, probabilities = self._points(power)
        keep = probabilities > 0.0
        return Alphabet(points=points[keep].astype(complex), probabilities=probabilities[keep])

    def sample(self, rng: np.random.Generator, shape: tuple[int, ...], power: float) -> np.ndarray:
        """IID draws of shape ``shape``."""
        alphabet = self.alphabet(power)
        if len(alphabet) == 1:
            return np.full(shape, alphabet.points[0], dtype=complex)
        indices = rng.choice(len(alphabet), size=shape, p=alphabet.probabilities)
        return alphabet.points[indices]

    @abstractmethod
    def describe(self) -> str:
        pass


@dataclass(frozen=True)
class OnOff(InputModel):
    """
    On-off keying: 0 with probability 1 − p_on, amplitude √(P/p_on) otherwise.
    """

    p_on: float = 0.5
    name = "onoff"

    def __post_init__(self) -> None:
        if not (0.0 < self.p_on <= 1.0):
            raise EstimationError(f"on-probability must lie in (0, 1], got {self.p_on}")

    def amplitude(self, power: float) -> float:
        return math.sqrt(power / self.p_on)

    def _points(self, power: float) -> tuple[np.ndarray, np.ndarray]:
        points = np.array([0.0, self.amplitude(power)], dtype=complex)
        probabilities = np.array([1.0 - self.p_on, self.p_on])
        return points, probabilities

    def describe(self) -> str:
        return f"onoff(p_on={self.p_on!r})"


@dataclass(frozen=True)
class PSK(InputModel):
    """Equiprobable phase-shift keying on the circle of radius √P."""

    order: int = 4
    name = "psk"

    def __post_init__(self) -> None:
        if self.order < 2:
            raise EstimationError(f"PSK order must be at least 2, got {self.order}")

    def _points(self, power: float) -> tuple[np.ndarray, np.ndarray]:
        phases = 2.0 * np.pi * np.arange(self.order) / self.order
        points = math.sqrt(power) * np.exp(1j * phases)
        probabilities = np.full(self.order, 1.0 / self.order)
        return points, probabilities

    def describe(self) -> str:
        return f"psk(order={self.order})"


@dataclass(frozen=True)
class IIDGaussian(InputModel):
    """Circularly-symmetric complex Gaussian inputs CN(0, P)."""

    name = "gaussian"

    @property
    def is_finite(self) -> bool:
        return False

    def _points(self, power: float) -> tuple[np.ndarray, np.ndarray]:
        raise NotFiniteAlphabetError("Gaussian inputs have no finite alphabet")

    def sample(self, rng: np.random.Generator, shape: tuple[int, ...], power: float) -> np.ndarray:
        return complex_normal(rng, shape, power)

    def describe(self) -> str:
        return "gaussian"


def make_input_model(kind: str, p_on: float = 0.5, order: int = 4) -> InputModel:
    """
    Input model from its configuration name.

    Args:
        kind: "onoff", "psk" or "gaussian"
        p_on: On-probability for on-off keying
        order: Constellation size for PSK
    """
    if kind == "onoff":
        return OnOff(p_on=p_on)
    if kind == "psk":
        return PSK(order=order)
    if kind == "gaussian":
        return IIDGaussian()
    raise EstimationError(f"unknown input model {kind!r}")
