"""
Analytic capacity upper bound for slowly-decaying power-delay profiles.

Detects the geometric floor (ℓ₀, ρ), builds the contraction factor β̃,
evaluates and optimizes the SNR-independent constant K, and assembles the
finite-blocklength bound.
"""

from .constant import (
    DEFAULT_DELTAS,
    DEFAULT_ETAS,
    BoundParams,
    BoundResult,
    GridSpec,
    OptimizedK,
    compute_K,
    evaluate_bound,
    fixed_bound_params,
    optimize_K,
)
from .epsilon import ConstantEpsilon, EpsilonTerm, MissingEpsilon, SmallBallEpsilon, TableEpsilon
from .errors import (
    BlocklengthTooShortError,
    BoundError,
    BoundParameterError,
    EmptyGridError,
    EpsilonLookupError,
    InternalConsistencyError,
    NoGeometricFloorError,
    TelescopingIndexError,
)
from .finite_n import finite_n_bound, finite_n_capacity_bound, first_terms_bound, per_k_firstl_bound
from .floor import GeometricFloor, compute_beta_tilde, detect_geometric_floor
from .telescoping import TelescopingSplit, log_power_sequences, telescoping_split

__all__ = [
    "DEFAULT_DELTAS",
    "DEFAULT_ETAS",
    "BlocklengthTooShortError",
    "BoundError",
    "BoundParameterError",
    "BoundParams",
    "BoundResult",
    "ConstantEpsilon",
    "EmptyGridError",
    "EpsilonLookupError",
    "EpsilonTerm",
    "GeometricFloor",
    "GridSpec",
    "InternalConsistencyError",
    "MissingEpsilon",
    "NoGeometricFloorError",
    "OptimizedK",
    "SmallBallEpsilon",
    "TableEpsilon",
    "TelescopingIndexError",
    "TelescopingSplit",
    "compute_K",
    "compute_beta_tilde",
    "detect_geometric_floor",
    "evaluate_bound",
    "fixed_bound_params",
    "finite_n_bound",
    "finite_n_capacity_bound",
    "first_terms_bound",
    "log_power_sequences",
    "optimize_K",
    "per_k_firstl_bound",
    "telescoping_split",
]
