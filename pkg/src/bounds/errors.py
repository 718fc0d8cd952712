"""
Exceptions raised by the bound engine.
"""


class BoundError(Exception):
    """Base exception for bound evaluation errors"""
    pass


class BoundParameterError(BoundError):
    """Raised when δ, η, β̃, ρ or κ fall outside their admissible ranges"""
    pass


class BlocklengthTooShortError(BoundError):
    """Raised when the finite-n bound is requested for n ≤ 2ℓ₀"""
    pass


class InternalConsistencyError(BoundError):
    """Raised when a constructed quantity fails its defining inequality"""
    pass


class EmptyGridError(BoundError):
    """Raised when the (δ, η) optimization grid has no points"""
    pass


class TelescopingIndexError(BoundError):
    """Raised when telescoping sequences are too short for the requested split"""
    pass


class EpsilonLookupError(BoundError):
    """Raised when an ε override table has no entry for a (δ, η) pair"""
    pass


class NoGeometricFloorError(BoundError):
    """Raised when a bound is requested for a profile outside the bounded regime"""

    def __init__(self, decay_class: str, profile: str):
        self.decay_class = decay_class
        self.profile = profile
        super().__init__(
            f"profile {profile} is classified {decay_class}; "
            "the SNR-independent bound needs a Bounded profile"
        )
