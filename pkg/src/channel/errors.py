"""
Exceptions raised by the channel model and its Gaussian machinery.
"""

from dataclasses import dataclass
from typing import Any


class ChannelModelError(Exception):
    """Base exception for channel model errors"""
    pass


class ProfileError(ChannelModelError):
    """Raised when a power-delay profile cannot be constructed or evaluated"""
    pass


class TapProcessError(ChannelModelError):
    """Raised when a tap process descriptor is invalid"""
    pass


class EntropyRateUndefinedError(ChannelModelError):
    """Raised when an entropy rate is requested for a tap with zero variance"""
    pass


class FactorizationError(ChannelModelError):
    """Raised when a covariance matrix fails Cholesky factorization"""
    pass


@dataclass(frozen=True)
class ValidationIssue:
    """One violated channel assumption."""

    field: str
    message: str
    value: Any = None

    def __str__(self) -> str:
        if self.value is None:
            return f"{self.field}: {self.message}"
        return f"{self.field}: {self.message} (got {self.value!r})"


class ConfigValidationError(ChannelModelError):
    """
    Raised when a channel configuration violates the model assumptions.

    Carries every issue found, not only the first one.
    """

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        summary = "; ".join(str(issue) for issue in self.issues)
        super().__init__(f"Invalid channel configuration: {summary}")
