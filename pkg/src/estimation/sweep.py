"""
SNR sweeps: exact MI, duality upper estimate and the analytic bound per SNR.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from bounds import BoundResult, first_terms_bound
from channel import ChannelConfig
from utils.metrics import RunMetrics
from utils.tracing import trace_operation

from .duality import duality_upper_bound
from .inputs import InputModel
from .mutual_info import exact_mi
from .parallel import derive_seed
from .results import MIEstimate

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "snr_db",
    "snr",
    "seed",
    "mi",
    "mi_se",
    "duality_upper",
    "duality_upper_se",
    "duality_discarded",
    "bound",
    "bound_chain_rule",
)


def db_to_linear(snr_db: float) -> float:
    return 10.0 ** (snr_db / 10.0)


def linear_to_db(snr: float) -> float:
    return 10.0 * math.log10(snr) if snr > 0.0 else -math.inf


@dataclass(frozen=True)
class SweepRow:
    """
    One SNR point of a sweep.

    ``mi`` is None for inputs without a finite alphabet; ``duality`` and
    the bound columns are None when no bound applies (profile not Bounded
    or n ≤ ℓ₀).
    """

    index: int
    snr: float
    seed: int
    mi: MIEstimate | None
    duality: MIEstimate | None
    bound: float | None
    bound_chain_rule: float | None

    @property
    def snr_db(self) -> float:
        return linear_to_db(self.snr)

    def values(self) -> list[Any]:
        """Cells in SWEEP_COLUMNS order."""
        return [
            self.snr_db,
            self.snr,
            self.seed,
            self.mi.mean if self.mi else None,
            self.mi.std_error if self.mi else None,
            self.duality.mean if self.duality else None,
            self.duality.std_error if self.duality else None,
            self.duality.discarded if self.duality else None,
            self.bound,
            self.bound_chain_rule,
        ]


def mi_sweep(
    config: ChannelConfig,
    input_model: InputModel,
    n: int,
    snrs: Sequence[float],
    samples: int,
    seed: int,
    bound: BoundResult | None = None,
    snr_in_db: bool = True,
    max_workers: int | None = None,
    metrics: RunMetrics | None = None,
) -> list[SweepRow]:
    """
    Evaluate the estimators and the bound at each SNR.

    Row i uses seed derive_seed(seed, "mi", i), so rows can be recomputed
    in isolation and reordering the list does not change a row's draws.

    Args:
        config: Template configuration; its power is replaced per row
        input_model: Input law
        n: Blocklength
        snrs: SNR values, in dB unless ``snr_in_db`` is False
        samples: Monte-Carlo draws per row
        seed: Master seed
        bound: Bound for the profile (duality and bound columns are left
            empty when None)
        snr_in_db: Interpret ``snrs`` as dB
        max_workers: Worker threads (results do not depend on it)
        metrics: Optional run metrics

    Returns:
        Rows in input order; empty for an empty SNR list
    """
    rows: list[SweepRow] = []
    duality_ok = bound is not None and n > bound.params.ell0
    if bound is not None and not duality_ok:
        logger.warning(f"n={n} ≤ ℓ₀={bound.params.ell0}: duality column left empty")

    with trace_operation("estimation.mi_sweep", blocklength=n, points=len(snrs), samples=samples):
        for index, value in enumerate(snrs):
            snr = db_to_linear(value) if snr_in_db else float(value)
            row_config = config.with_snr(snr)
            row_seed = derive_seed(seed, "mi", index)

            mi = None
            if input_model.is_finite:
                mi = exact_mi(row_config, input_model, n, samples, row_seed, max_workers, metrics)

            duality = None
            analytic = None
            analytic_chain = None
            if bound is not None and n > 2 * bound.params.ell0:
                analytic = bound.finite_n(n, snr)
                analytic_chain = bound.finite_n(n, snr, chain_rule=True)
            if duality_ok:
                result = duality_upper_bound(
                    row_config,
                    input_model,
                    n,
                    bound.params,
                    samples,
                    derive_seed(row_seed, "duality"),
                    max_workers,
                    metrics,
                )
                duality = result.per_use_upper(first_terms_bound(row_config, n))

            row = SweepRow(
                index=index,
                snr=snr,
                seed=row_seed,
                mi=mi,
                duality=duality,
                bound=analytic,
                bound_chain_rule=analytic_chain,
            )
            rows.append(row)
            logger.info(
                f"Sweep row {index}: SNR={row.snr_db:.2f} dB, "
                f"MI={'-' if mi is None else f'{mi.mean:.6f}'}, "
                f"bound={'-' if analytic is None else f'{analytic:.6f}'}",
                extra={"row": index, "seed": row_seed},
            )
    return rows
