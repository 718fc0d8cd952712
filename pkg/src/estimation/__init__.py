"""
Monte-Carlo laboratory: exact-mixture mutual information, the duality
upper bound, the proof-chain audit and SNR sweeps.
"""

from .duality import DualityResult, cauchy_log_density, duality_upper_bound
from .errors import (
    AlphabetTooLargeError,
    AuditPointError,
    ChunkExecutionError,
    EstimationError,
    NotFiniteAlphabetError,
)
from .inputs import PSK, Alphabet, IIDGaussian, InputModel, OnOff, make_input_model
from .mutual_info import (
    MAX_SEQUENCES,
    MixtureEstimate,
    MixtureModel,
    build_mixture,
    conditional_mi_terms,
    estimate_mutual_information,
    exact_mi,
)
from .results import EstimatorKind, MIEstimate, mean_and_error
from .simulate import JointSample, draw_joint, simulate_channel
from .sweep import SWEEP_COLUMNS, SweepRow, db_to_linear, linear_to_db, mi_sweep
from .verify import InequalityCheck, Verdict, VerifyReport, verify_proof_chain

__all__ = [
    "MAX_SEQUENCES",
    "PSK",
    "SWEEP_COLUMNS",
    "Alphabet",
    "AlphabetTooLargeError",
    "AuditPointError",
    "ChunkExecutionError",
    "DualityResult",
    "EstimationError",
    "EstimatorKind",
    "IIDGaussian",
    "InequalityCheck",
    "InputModel",
    "JointSample",
    "MIEstimate",
    "MixtureEstimate",
    "MixtureModel",
    "NotFiniteAlphabetError",
    "OnOff",
    "SweepRow",
    "Verdict",
    "VerifyReport",
    "build_mixture",
    "cauchy_log_density",
    "conditional_mi_terms",
    "db_to_linear",
    "draw_joint",
    "duality_upper_bound",
    "estimate_mutual_information",
    "exact_mi",
    "linear_to_db",
    "make_input_model",
    "mean_and_error",
    "mi_sweep",
    "simulate_channel",
    "verify_proof_chain",
]
