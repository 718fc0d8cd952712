"""
Numerical audit of the proof chain behind the capacity bound.

Every step of the argument is an inequality between expectations that
can be estimated by Monte Carlo on a concrete channel. Each row below is
normalized so that it reads ``lhs ≤ rhs``; P_k denotes
σ² + Σ_{ℓ≤k} α_{k−ℓ}·|X_ℓ|².

    U1     E log|Y_k|²                         ≤ E log P_k
    U2     E log(β̃·|Y_{k−ℓ₀}|²)               ≤ E log(σ² + Σ_{ℓ≤k−ℓ₀} α_{k−ℓ}|X_ℓ|²)
    U3     E log(β̃·|Y_{k−ℓ₀}|² + |Y_k|²)      ≤ log 2 + E log P_k
    U4     E log P_k + κ                        ≤ E log(πe·s_k(X))
    U5     E log P_{k−ℓ₀} + log δ² − 2ε
             − (2/η)(2/e + log πe) + (2/η)κ     ≤ E log|Y_{k−ℓ₀}|²
    firstl I(X; Y_k | Y_1^{k−1}), k ≤ ℓ₀      ≤ log(1 + sup α·n·SNR)

Stochastic rows pass when the mean difference is at most three standard
errors of the paired difference; deterministic rows use a relative
tolerance of 1e−10.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Sequence

import numpy as np

from bounds import BoundParams, EpsilonLookupError, first_terms_bound, per_k_firstl_bound
from channel import ChannelConfig
from channel.gaussian import LOG_PI_E, output_power, regularity_constant
from utils.metrics import RunMetrics
from utils.tracing import add_span_event, trace_operation

from ..errors import AlphabetTooLargeError, AuditPointError, EstimationError
from ..inputs import InputModel
from ..mutual_info import conditional_mi_terms
from ..parallel import ChunkExecutor, ChunkSpec, derive_seed, plan_chunks
from ..results import mean_and_error
from ..simulate import draw_joint

UTC = timezone.utc

logger = logging.getLogger(__name__)

AUDIT_CHUNK = 2048
SIGMAS = 3.0
DETERMINISTIC_TOLERANCE = 1e-10
CHAIN_STEPS = ("U1", "U2", "U3", "U4", "U5")
FIRST_TERMS = "firstl"

# Per-sample quantities gathered for every audited k > ℓ₀
_QUANTITIES = (
    "log_y",          # log|Y_k|²
    "log_y_delayed",  # log|Y_{k−ℓ₀}|²
    "log_mixed",      # log(β̃·|Y_{k−ℓ₀}|² + |Y_k|²)
    "log_power",      # log P_k
    "log_power_delayed",  # log P_{k−ℓ₀}
    "log_partial",    # log(σ² + Σ_{ℓ≤k−ℓ₀} α_{k−ℓ}|X_ℓ|²)
    "log_innovation",  # log(πe·s_k(X))
)


class Verdict:
    """Constants for row verdicts."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class InequalityCheck:
    """
    One audited inequality at one time index.

    Attributes:
        inequality: U1 … U5 or firstl
        k: One-based time index
        lhs: Estimated left-hand side
        lhs_se: Standard error of lhs (0 when deterministic)
        rhs: Estimated right-hand side
        rhs_se: Standard error of rhs (0 when deterministic)
        margin_se: (rhs − lhs) in units of the paired standard error;
            None for deterministic rows
        verdict: PASS, FAIL or SKIPPED
        note: Reason for a skip or the tolerance used
    """

    inequality: str
    k: int
    lhs: float | None
    lhs_se: float | None
    rhs: float | None
    rhs_se: float | None
    margin_se: float | None
    verdict: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class VerifyReport:
    """
    Audit result for one channel, input law and blocklength.

    Attributes:
        checks: Rows in (k, inequality) order
        blocklength: n
        samples: Monte-Carlo draws per row
        seed: Master seed
        ell0: Floor delay ℓ₀ used by U2, U3 and U5
        discarded: Draws dropped because an output was exactly zero
        timestamp: ISO 8601 creation time
    """

    checks: list[InequalityCheck]
    blocklength: int
    samples: int
    seed: int
    ell0: int
    discarded: int = 0
    timestamp: str = field(default_factory=lambda: datetime.now(UTC).isoformat())

    @property
    def failures(self) -> list[InequalityCheck]:
        return [check for check in self.checks if check.verdict == Verdict.FAIL]

    @property
    def skipped(self) -> list[InequalityCheck]:
        return [check for check in self.checks if check.verdict == Verdict.SKIPPED]

    @property
    def status(self) -> str:
        return Verdict.PASS if not self.failures else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.status == Verdict.PASS

    def summary(self) -> str:
        audited = len(self.checks) - len(self.skipped)
        failed = len(self.failures)
        if failed == 0:
            text = f"All {audited} audited inequalities hold at n={self.blocklength} ({self.samples} samples)."
        else:
            text = (
                f"{failed} of {audited} audited inequalities are violated at n={self.blocklength} "
                f"({self.samples} samples)."
            )
        if self.skipped:
            text += f" {len(self.skipped)} skipped."
        return text

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "blocklength": self.blocklength,
            "samples": self.samples,
            "seed": self.seed,
            "ell0": self.ell0,
            "discarded": self.discarded,
            "checks": [check.to_dict() for check in self.checks],
            "failures": len(self.failures),
            "summary": self.summary(),
            "timestamp": self.timestamp,
        }


def default_audit_points(ell0: int, n: int) -> list[int]:
    """
    {1, …, ℓ₀} ∪ {ℓ₀+1, n}.

    Raises:
        AuditPointError: If n < ℓ₀ + 1
    """
    if n < ell0 + 1:
        raise AuditPointError(f"the audit needs n ≥ ℓ₀ + 1 = {ell0 + 1}, got n = {n}")
    return sorted(set(range(1, ell0 + 1)) | {ell0 + 1, n})


def _stochastic_check(
    inequality: str,
    k: int,
    lhs: np.ndarray,
    rhs: np.ndarray,
    rhs_offset: float,
) -> InequalityCheck:
    """
    Compare two paired per-sample arrays.

    Both sides are evaluated on the same draws. The combined SE is the
    standard error of the per-draw difference rhs − lhs, not
    √(se_lhs² + se_rhs²). PASS iff LHS ≤ RHS + 3·(combined SE), or the gap
    is within rounding of zero.
    """
    lhs_mean, lhs_se = mean_and_error(lhs)
    rhs_mean, rhs_se = mean_and_error(rhs)
    rhs_mean -= rhs_offset
    _, diff_se = mean_and_error(rhs - lhs)
    gap = rhs_mean - lhs_mean

    # Rounding noise on identical sides must not read as a violation
    tolerance = DETERMINISTIC_TOLERANCE * max(1.0, abs(lhs_mean), abs(rhs_mean))
    if diff_se > 0.0:
        margin = gap / diff_se
        passed = margin >= -SIGMAS or gap >= -tolerance
        note = f"{SIGMAS:g}σ paired"
    else:
        margin = None
        passed = gap >= -tolerance
        note = "zero variance"
    return InequalityCheck(
        inequality=inequality,
        k=k,
        lhs=lhs_mean,
        lhs_se=lhs_se,
        rhs=rhs_mean,
        rhs_se=rhs_se,
        margin_se=margin,
        verdict=Verdict.PASS if passed else Verdict.FAIL,
        note=note,
    )


def _deterministic_check(inequality: str, k: int, lhs: float, rhs: float) -> InequalityCheck:
    tolerance = DETERMINISTIC_TOLERANCE * max(1.0, abs(lhs), abs(rhs))
    return InequalityCheck(
        inequality=inequality,
        k=k,
        lhs=lhs,
        lhs_se=0.0,
        rhs=rhs,
        rhs_se=0.0,
        margin_se=None,
        verdict=Verdict.PASS if lhs <= rhs + tolerance else Verdict.FAIL,
        note="deterministic",
    )


def _skipped(inequality: str, k: int, reason: str) -> InequalityCheck:
    return InequalityCheck(
        inequality=inequality,
        k=k,
        lhs=None,
        lhs_se=None,
        rhs=None,
        rhs_se=None,
        margin_se=None,
        verdict=Verdict.SKIPPED,
        note=reason,
    )


def _partial_power(config: ChannelConfig, x: np.ndarray, k: int, ell0: int) -> np.ndarray:
    """σ² + Σ_{ℓ=1}^{k−ℓ₀} α_{k−ℓ}·|x_ℓ|² for one-based k."""
    delays = np.arange(ell0, k)
    alphas = config.profile.alphas(k)[delays]
    symbols = np.abs(x[:, k - 1 - delays]) ** 2
    return config.noise_var + symbols @ alphas


def _audit_chunk(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    ks: Sequence[int],
    params: BoundParams,
    chunk: ChunkSpec,
) -> np.ndarray:
    """Quantities of shape (chunk.size, len(ks), len(_QUANTITIES))."""
    rng = np.random.default_rng(chunk.seed)
    joint = draw_joint(config, input_model, n, chunk.size, rng)
    power = output_power(config, joint.x)
    innovations = joint.conditional_variances
    y_power = np.abs(joint.y) ** 2
    ell0 = params.ell0

    out = np.empty((chunk.size, len(ks), len(_QUANTITIES)))
    with np.errstate(divide="ignore"):
        for column, k in enumerate(ks):
            current = y_power[:, k - 1]
            delayed = y_power[:, k - 1 - ell0]
            out[:, column, 0] = np.log(current)
            out[:, column, 1] = np.log(delayed)
            out[:, column, 2] = np.log(params.beta_tilde * delayed + current)
            out[:, column, 3] = np.log(power[:, k - 1])
            out[:, column, 4] = np.log(power[:, k - 1 - ell0])
            out[:, column, 5] = np.log(_partial_power(config, joint.x, k, ell0))
            out[:, column, 6] = LOG_PI_E + np.log(innovations[:, k - 1])
    return out


def _chain_checks(
    k: int,
    values: np.ndarray,
    params: BoundParams,
    kappa: float,
    rhs_offset: float,
) -> list[InequalityCheck]:
    """U1 … U5 at one k from the (M, len(_QUANTITIES)) quantity block."""
    q = {name: values[:, index] for index, name in enumerate(_QUANTITIES)}
    log_beta = math.log(params.beta_tilde)

    checks = [
        _stochastic_check("U1", k, q["log_y"], q["log_power"], rhs_offset),
        _stochastic_check("U2", k, log_beta + q["log_y_delayed"], q["log_partial"], rhs_offset),
        _stochastic_check("U3", k, q["log_mixed"], math.log(2.0) + q["log_power"], rhs_offset),
        _stochastic_check("U4", k, q["log_power"] + kappa, q["log_innovation"], rhs_offset),
    ]

    try:
        epsilon = params.epsilon_value
    except EpsilonLookupError as e:
        checks.append(_skipped("U5", k, str(e)))
        return checks

    eta = params.eta
    shift = (
        2.0 * math.log(params.delta)
        - 2.0 * epsilon
        - (2.0 / eta) * (2.0 / math.e + LOG_PI_E)
        + (2.0 / eta) * kappa
    )
    checks.append(_stochastic_check("U5", k, q["log_power_delayed"] + shift, q["log_y_delayed"], rhs_offset))
    return checks


def _first_term_checks(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    ks: Sequence[int],
    samples: int,
    seed: int,
    rhs_offset: float,
    max_workers: int | None,
) -> list[InequalityCheck]:
    """firstl rows; exact mixture terms for finite alphabets, closed form otherwise."""
    rhs = first_terms_bound(config, n) - rhs_offset
    if not ks:
        return []

    terms = None
    if input_model.is_finite:
        try:
            terms = conditional_mi_terms(
                config, input_model, n, samples, derive_seed(seed, "verify", FIRST_TERMS), max_workers
            )
        except AlphabetTooLargeError as e:
            logger.warning(f"firstl rows fall back to the Gaussian-input bound: {e}")

    checks = []
    for k in ks:
        if terms is None:
            checks.append(_deterministic_check(FIRST_TERMS, k, per_k_firstl_bound(config, k), rhs))
            continue
        estimate = terms[k - 1]
        gap = rhs - estimate.mean
        tolerance = DETERMINISTIC_TOLERANCE * max(1.0, abs(estimate.mean), abs(rhs))
        if estimate.std_error > 0.0:
            margin = gap / estimate.std_error
            passed = margin >= -SIGMAS or gap >= -tolerance
        else:
            margin = None
            passed = gap >= -tolerance
        checks.append(
            InequalityCheck(
                inequality=FIRST_TERMS,
                k=k,
                lhs=estimate.mean,
                lhs_se=estimate.std_error,
                rhs=rhs,
                rhs_se=0.0,
                margin_se=margin,
                verdict=Verdict.PASS if passed else Verdict.FAIL,
                note="exact mixture",
            )
        )
    return checks


def verify_proof_chain(
    config: ChannelConfig,
    input_model: InputModel,
    params: BoundParams,
    n: int,
    samples: int,
    seed: int,
    ks: Sequence[int] | None = None,
    rhs_offset: float = 0.0,
    max_workers: int | None = None,
    metrics: RunMetrics | None = None,
) -> VerifyReport:
    """
    Audit each inequality of the bound on a concrete channel.

    Args:
        config: Validated channel configuration
        input_model: Input law the expectations are taken under
        params: ℓ₀, β̃, δ, η and the ε provider
        n: Blocklength
        samples: Monte-Carlo draws M (at least 2)
        seed: Master seed
        ks: One-based time indices; {1..ℓ₀} ∪ {ℓ₀+1, n} when None.
            Indices ≤ ℓ₀ get a firstl row, the others U1 … U5.
        rhs_offset: Subtracted from every right-hand side; a positive
            offset turns the audit into a self-test that must fail
        max_workers: Worker threads (results do not depend on it)
        metrics: Optional run metrics

    Returns:
        VerifyReport; ``status`` is FAIL if any row fails

    Raises:
        AuditPointError: If an index is outside 1 … n or n < ℓ₀ + 1
    """
    ell0 = params.ell0
    points = default_audit_points(ell0, n) if ks is None else sorted(set(int(k) for k in ks))
    for k in points:
        if not (1 <= k <= n):
            raise AuditPointError(f"audit index k={k} lies outside 1 … {n}")
    if samples < 2:
        raise EstimationError(f"the audit needs at least two samples, got {samples}")

    first_ks = [k for k in points if k <= ell0]
    chain_ks = [k for k in points if k > ell0]
    kappa = regularity_constant(config)

    checks: list[InequalityCheck] = []
    discarded = 0
    with trace_operation("estimation.verify", blocklength=n, samples=samples, ell0=ell0):
        checks.extend(
            _first_term_checks(config, input_model, n, first_ks, samples, seed, rhs_offset, max_workers)
        )

        if chain_ks:
            chunks = plan_chunks(samples, AUDIT_CHUNK, seed, "verify")
            parts = ChunkExecutor(max_workers).map_chunks(
                lambda chunk: _audit_chunk(config, input_model, n, chain_ks, params, chunk),
                chunks,
                task="verify",
            )
            quantities = np.concatenate(parts, axis=0)
            finite = np.all(np.isfinite(quantities), axis=(1, 2))
            discarded = int(samples - np.count_nonzero(finite))
            if discarded:
                logger.warning(f"Audit discarded {discarded} of {samples} draws with a zero output")
            quantities = quantities[finite]

            for column, k in enumerate(chain_ks):
                checks.extend(_chain_checks(k, quantities[:, column, :], params, kappa, rhs_offset))

        for check in checks:
            if check.verdict == "FAIL":
                add_span_event(
                    "inequality_violated", inequality=check.inequality, k=check.k, margin_se=check.margin_se
                )

    report = VerifyReport(
        checks=checks,
        blocklength=n,
        samples=samples,
        seed=seed,
        ell0=ell0,
        discarded=discarded,
    )

    if metrics is not None:
        metrics.record_samples("verify", samples, discarded)
        for check in checks:
            metrics.record_verification(check.inequality, check.verdict)

    for failure in report.failures:
        logger.error(
            f"{failure.inequality} violated at k={failure.k}: lhs={failure.lhs:.6f} > rhs={failure.rhs:.6f}",
            extra={"inequality": failure.inequality, "k": failure.k},
        )
    logger.info(f"Proof-chain audit {report.status}: {report.summary()}")
    return report
