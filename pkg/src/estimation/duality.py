"""
Duality upper bound with the Cauchy-type reference density.

For k > ℓ₀ the output reference density, given the past, is

    r(y_k) = √β / (π²·|y_k|) · 1 / (1 + β·|y_k|²),   β = 1 / (β̃·|y_{k−ℓ₀}|²)

and E[log f(Y_k | X, Y_1^{k−1}) − log r(Y_k)] upper-bounds
I(X_1^n; Y_k | Y_1^{k−1}) whatever the SNR.
"""

import logging
from dataclasses import dataclass

import numpy as np

from bounds import BoundParams
from channel import ChannelConfig
from utils.metrics import RunMetrics
from utils.tracing import trace_operation

from .errors import AuditPointError, EstimationError
from .inputs import InputModel
from .parallel import ChunkExecutor, ChunkSpec, plan_chunks
from .results import EstimatorKind, MIEstimate
from .simulate import draw_joint

logger = logging.getLogger(__name__)

# |y_{k−ℓ₀}|² below this makes the reference density undefined in floating point
DEGENERATE_POWER = 1e-300
DUALITY_CHUNK = 2048


def cauchy_log_density(y: np.ndarray, y_delayed: np.ndarray, beta_tilde: float) -> np.ndarray:
    """
    log r(y_k) for the delayed-scale Cauchy reference.

    Args:
        y: Current outputs y_k
        y_delayed: Outputs y_{k−ℓ₀} setting the scale
        beta_tilde: Contraction factor β̃

    Returns:
        ½·log β − 2·log π − log|y_k| − log(1 + β·|y_k|²)
    """
    log_power = np.log(np.abs(y) ** 2)
    log_beta = -np.log(beta_tilde) - np.log(np.abs(y_delayed) ** 2)
    return 0.5 * log_beta - 2.0 * np.log(np.pi) - 0.5 * log_power - np.logaddexp(0.0, log_beta + log_power)


@dataclass(frozen=True)
class DualityResult:
    """
    Duality estimates for k = ℓ₀+1 … n.

    Attributes:
        ell0: Delay ℓ₀ of the reference density
        terms: Per-k upper estimates
        average: Per-sample average over k > ℓ₀
        total: Per-sample sum over k > ℓ₀
        discarded: Samples dropped because some |y_{k−ℓ₀}|² underflowed
    """

    ell0: int
    terms: list[MIEstimate]
    average: MIEstimate
    total: MIEstimate
    discarded: int

    @property
    def blocklength(self) -> int:
        return self.total.blocklength

    def per_use_upper(self, first_terms: float) -> MIEstimate:
        """
        Upper estimate of I(X_1^n; Y_1^n)/n.

        Combines ℓ₀ copies of a bound on the first terms with the duality
        terms: (ℓ₀·first_terms + Σ_{k>ℓ₀} duality_k)/n.
        """
        n = self.blocklength
        return MIEstimate(
            mean=(self.ell0 * first_terms + self.total.mean) / n,
            std_error=self.total.std_error / n,
            samples=self.total.samples,
            blocklength=n,
            seed=self.total.seed,
            kind=EstimatorKind.DUALITY_UPPER,
            discarded=self.discarded,
        )


def _duality_chunk(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    ell0: int,
    beta_tilde: float,
    chunk: ChunkSpec,
) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(chunk.seed)
    joint = draw_joint(config, input_model, n, chunk.size, rng)

    conditional = joint.conditional_log_densities()[:, ell0:]
    current = joint.y[:, ell0:]
    delayed = joint.y[:, : n - ell0]

    valid = (np.abs(delayed) ** 2 >= DEGENERATE_POWER) & (np.abs(current) ** 2 >= DEGENERATE_POWER)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        reference = cauchy_log_density(current, delayed, beta_tilde)
    terms = np.where(valid, conditional - reference, 0.0)
    return terms, valid


def duality_upper_bound(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    params: BoundParams,
    samples: int,
    seed: int,
    max_workers: int | None = None,
    metrics: RunMetrics | None = None,
) -> DualityResult:
    """
    Monte-Carlo duality bound on each I(X_1^n; Y_k | Y_1^{k−1}) with k > ℓ₀.

    Works for finite-alphabet and Gaussian inputs: only the true conditional
    density (closed form via Cholesky) and the reference density are needed.

    Args:
        config: Validated channel configuration
        input_model: Input law
        n: Blocklength
        params: Bound parameters (ℓ₀ and β̃ are used)
        samples: Monte-Carlo sample count M
        seed: Master seed
        max_workers: Worker threads (results do not depend on it)
        metrics: Optional run metrics

    Returns:
        DualityResult with per-k, average and summed estimates

    Raises:
        AuditPointError: If n ≤ ℓ₀ (no term has k > ℓ₀)
    """
    ell0 = params.ell0
    if n <= ell0:
        raise AuditPointError(f"duality terms need k > ℓ₀ = {ell0}, but n = {n}")

    chunks = plan_chunks(samples, DUALITY_CHUNK, seed, "duality")
    with trace_operation("estimation.duality", blocklength=n, samples=samples, ell0=ell0):
        parts = ChunkExecutor(max_workers).map_chunks(
            lambda chunk: _duality_chunk(config, input_model, n, ell0, params.beta_tilde, chunk),
            chunks,
            task="duality",
        )

    terms = np.concatenate([part[0] for part in parts], axis=0)
    valid = np.concatenate([part[1] for part in parts], axis=0)

    per_k = []
    for offset in range(n - ell0):
        column_valid = valid[:, offset]
        dropped = int(samples - np.count_nonzero(column_valid))
        per_k.append(
            MIEstimate.from_samples(
                terms[column_valid, offset],
                n,
                seed,
                EstimatorKind.DUALITY_UPPER,
                k=ell0 + 1 + offset,
                discarded=dropped,
            )
        )

    complete = np.all(valid, axis=1)
    discarded = int(samples - np.count_nonzero(complete))
    if discarded == samples:
        raise EstimationError("every duality sample was degenerate")
    sums = terms[complete].sum(axis=1)

    total = MIEstimate.from_samples(sums, n, seed, EstimatorKind.DUALITY_UPPER, discarded=discarded)
    average = MIEstimate.from_samples(sums / (n - ell0), n, seed, EstimatorKind.DUALITY_UPPER, discarded=discarded)

    if discarded:
        logger.warning(f"Duality bound discarded {discarded} of {samples} samples with |y_(k−ℓ₀)|² ≈ 0")
    if metrics is not None:
        metrics.record_samples("duality", samples, discarded)
        metrics.record_estimate("duality", average.mean)

    logger.info(
        f"Duality bound n={n} ℓ₀={ell0} SNR={config.snr:.6g}: "
        f"average {average.mean:.6f} ± {average.std_error:.6f}",
        extra={"estimator": "duality", "snr": config.snr, "seed": seed},
    )
    return DualityResult(ell0=ell0, terms=per_k, average=average, total=total, discarded=discarded)
