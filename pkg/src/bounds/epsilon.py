"""
Pluggable ε(δ, η) terms for the small-ball part of the output lower bound.

The lower bound on E[log|Y|²] splits E[log 1/|A|] at |A| = δ; the part
below δ is controlled by ε(δ, η) plus an η-weighted entropy term. Any
ε with ε > 0 and ε → 0 as δ ↓ 0 fits; every bound result records which
one was used.
"""

import csv
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BoundParameterError, EpsilonLookupError

logger = logging.getLogger(__name__)


def check_delta_eta(delta: float, eta: float) -> None:
    """
    Raises:
        BoundParameterError: Unless 0 < δ ≤ 1 and 0 < η < 1
    """
    if not (0.0 < delta <= 1.0):
        raise BoundParameterError(f"δ must lie in (0, 1], got {delta}")
    if not (0.0 < eta < 1.0):
        raise BoundParameterError(f"η must lie in (0, 1), got {eta}")


class EpsilonTerm(ABC):
    """Base class for ε(δ, η) providers."""

    @abstractmethod
    def value(self, delta: float, eta: float) -> float:
        """
        Evaluate ε(δ, η).

        Args:
            delta: Split radius δ ∈ (0, 1]
            eta: Entropy weight η ∈ (0, 1)

        Returns:
            ε ≥ 0
        """
        pass

    @abstractmethod
    def describe(self) -> str:
        """Label written next to every bound that used this term."""
        pass

    def __call__(self, delta: float, eta: float) -> float:
        check_delta_eta(delta, eta)
        return self.value(delta, eta)


class SmallBallEpsilon(EpsilonTerm):
    """
    ε(δ, η) = 2π·δ^(2−η) / (e·η·(2−η)).

    From the pointwise Fenchel–Young inequality f·t ≤ f·log f + e^(t−1)
    with t = η·log(1/|a|), integrated over the disc |a| ≤ δ:

        E[log(1/|A|)·1{|A| ≤ δ}] ≤ (1/η)·h⁻(A) + ∫_{|a|≤δ} |a|^(−η) da / (e·η)

    and the disc integral equals 2π·δ^(2−η)/(2−η).
    """

    def value(self, delta: float, eta: float) -> float:
        return 2.0 * math.pi * delta ** (2.0 - eta) / (math.e * eta * (2.0 - eta))

    def describe(self) -> str:
        return "small-ball"


@dataclass(frozen=True)
class ConstantEpsilon(EpsilonTerm):
    """ε ≡ constant, for what-if studies and tests."""

    constant: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.constant) and self.constant >= 0.0):
            raise BoundParameterError(f"ε must be finite and non-negative, got {self.constant}")

    def value(self, delta: float, eta: float) -> float:
        return self.constant

    def describe(self) -> str:
        return f"constant({self.constant!r})"


@dataclass(frozen=True)
class TableEpsilon(EpsilonTerm):
    """
    ε looked up from an override table.

    Keys are matched to 1e−12 relative tolerance; missing pairs raise
    instead of interpolating.
    """

    entries: dict[tuple[float, float], float] = field(default_factory=dict)
    source: str = "table"

    def value(self, delta: float, eta: float) -> float:
        exact = self.entries.get((delta, eta))
        if exact is not None:
            return exact
        for (table_delta, table_eta), epsilon in self.entries.items():
            if math.isclose(table_delta, delta, rel_tol=1e-12) and math.isclose(table_eta, eta, rel_tol=1e-12):
                return epsilon
        raise EpsilonLookupError(f"no ε entry for δ={delta!r}, η={eta!r} in {self.source}")

    def describe(self) -> str:
        return f"table({self.source})"

    @classmethod
    def from_csv(cls, path: str | Path) -> "TableEpsilon":
        """
        Load a table with columns ``delta,eta,epsilon``.

        Raises:
            EpsilonLookupError: If the file is malformed or holds invalid values
        """
        path = Path(path)
        entries: dict[tuple[float, float], float] = {}
        try:
            with path.open(newline="", encoding="utf-8") as handle:
                reader = csv.DictReader(row for row in handle if not row.startswith("#"))
                missing = {"delta", "eta", "epsilon"} - set(reader.fieldnames or ())
                if missing:
                    raise EpsilonLookupError(f"{path}: missing columns {sorted(missing)}")
                for line, row in enumerate(reader, start=2):
                    delta, eta, epsilon = float(row["delta"]), float(row["eta"]), float(row["epsilon"])
                    check_delta_eta(delta, eta)
                    if not (math.isfinite(epsilon) and epsilon >= 0.0):
                        raise EpsilonLookupError(f"{path}:{line}: ε must be finite and non-negative")
                    entries[(delta, eta)] = epsilon
        except OSError as e:
            raise EpsilonLookupError(f"cannot read ε table {path}: {e}") from e
        except (ValueError, BoundParameterError) as e:
            raise EpsilonLookupError(f"{path}: {e}") from e

        logger.info(f"Loaded {len(entries)} ε entries from {path}")
        return cls(entries=entries, source=path.name)


class MissingEpsilon(EpsilonTerm):
    """
    Placeholder when no ε is available.

    Evaluating it raises, so K cannot be formed; the proof-chain audit
    reports the step that needs ε as skipped instead.
    """

    def value(self, delta: float, eta: float) -> float:
        raise EpsilonLookupError("no ε term configured")

    def describe(self) -> str:
        return "none"
