"""
CLI command implementations.

Each ``cmd_*`` function takes parsed arguments and returns the process
exit code; ``main`` maps exceptions to codes and handles the ambient
setup (logging, tracing, metrics).
"""

import argparse
import json
import logging

import numpy as np

from bounds import (
    BoundError,
    BoundResult,
    MissingEpsilon,
    evaluate_bound,
    fixed_bound_params,
)
from channel import ChannelConfig, DecayClass, classify_decay, finite_memory_length
from estimation import AuditPointError, linear_to_db, mi_sweep, simulate_channel
from estimation.parallel import derive_seed
from estimation.sweep import SWEEP_COLUMNS
from estimation.verify import (
    CSV_COLUMNS as VERIFY_COLUMNS,
    format_report_console,
    report_rows,
    verify_proof_chain,
)
from utils.metrics import RunMetrics

from ..charts import plot_sweep
from ..config import RunConfig
from ..errors import RunConfigError, UsageError
from ..output import ArtifactWriter, Provenance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2

CLASSIFY_COLUMNS = ("profile", "decay_class", "sup_alpha", "memory_length", "tail")
BOUND_COLUMNS = (
    "channel",
    "K",
    "kappa",
    "sup_alpha",
    "ell0",
    "rho",
    "beta_tilde",
    "delta",
    "eta",
    "epsilon",
    "epsilon_source",
    "n",
    "snr_db",
    "bound",
    "bound_chain_rule",
)
SIMULATE_COLUMNS = ("trace", "k", "x_re", "x_im", "y_re", "y_im")


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Load the config file and apply ``--seed/--samples/--out-dir``.

    Raises:
        RunConfigError: On unreadable or invalid configuration
    """
    config = RunConfig.load(args.config)
    return config.with_overrides(seed=args.seed, samples=args.samples, out_dir=args.out_dir)


def _snr_points(run: RunConfig) -> list[float]:
    """SNR points in dB; a single point from ``power`` when no list is given."""
    if run.experiment.snr_db:
        return list(run.experiment.snr_db)
    return [linear_to_db(run.power() / run.channel.noise_var)]


def _require_bounded(channel: ChannelConfig) -> None:
    decay = classify_decay(channel.profile)
    if decay is not DecayClass.BOUNDED:
        raise RunConfigError(
            [
                f"channel.profile: decay class is {decay.value}; the capacity bound "
                "needs a Bounded profile (geometric floor)"
            ]
        )


def _optional_bound(run: RunConfig, channel: ChannelConfig) -> BoundResult | None:
    """Bound for the sweep columns, or None when it does not apply."""
    if classify_decay(channel.profile) is not DecayClass.BOUNDED:
        logger.info("Profile is not Bounded: bound and duality columns stay empty")
        return None
    epsilon = run.epsilon_term()
    if isinstance(epsilon, MissingEpsilon):
        logger.info("No ε configured: bound and duality columns stay empty")
        return None
    return evaluate_bound(channel, run.grid(), epsilon, run.bound.horizon)


def cmd_classify(args: argparse.Namespace, run: RunConfig, metrics: RunMetrics) -> int:
    """Decay class for the channel profile and every extra profile."""
    rows = []
    for name, profile in run.named_profiles():
        decay = classify_decay(profile)
        rows.append([name, decay.value, profile.sup_alpha(), finite_memory_length(profile), profile.describe()])
        logger.info(f"{name}: {decay.value}")

    writer = ArtifactWriter(run, Provenance.for_run("classify", run))
    writer.write_csv("classify.csv", CLASSIFY_COLUMNS, rows)
    print(writer.render_csv(CLASSIFY_COLUMNS, rows), end="")
    return EXIT_OK


def cmd_bound(args: argparse.Namespace, run: RunConfig, metrics: RunMetrics) -> int:
    """K at the optimal (δ, η) and the finite-n bound per blocklength and SNR."""
    channel = run.channel_config()
    _require_bounded(channel)
    epsilon = run.epsilon_term()
    if isinstance(epsilon, MissingEpsilon):
        raise RunConfigError(["bound.epsilon: 'none' cannot evaluate K"])

    result = evaluate_bound(channel, run.grid(), epsilon, run.bound.horizon)
    params = result.params
    rows = []
    for n in run.bound.blocklengths:
        for snr_db in _snr_points(run):
            snr = 10.0 ** (snr_db / 10.0)
            valid = n > 2 * params.ell0
            rows.append(
                [
                    run.channel.id,
                    result.K,
                    result.kappa,
                    result.sup_alpha,
                    params.ell0,
                    params.rho,
                    params.beta_tilde,
                    params.delta,
                    params.eta,
                    params.epsilon_value,
                    params.epsilon.describe(),
                    n,
                    snr_db,
                    result.finite_n(n, snr) if valid else None,
                    result.finite_n(n, snr, chain_rule=True) if valid else None,
                ]
            )
    metrics.record_estimate("bound_K", result.K)

    writer = ArtifactWriter(run, Provenance.for_run("bound", run))
    writer.write_csv("bound.csv", BOUND_COLUMNS, rows)
    print(writer.render_csv(BOUND_COLUMNS, rows), end="")
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace, run: RunConfig, metrics: RunMetrics) -> int:
    """Input/output traces through sampled tap paths."""
    channel = run.channel_config()
    input_model = run.input_model()
    n = run.experiment.n
    seed = run.experiment.seed

    rows = []
    for trace in range(run.experiment.traces):
        rng_seed = derive_seed(seed, "simulate", trace)
        x = input_model.sample(np.random.default_rng(derive_seed(rng_seed, "inputs")), (n,), channel.power)
        y = simulate_channel(channel, x, derive_seed(rng_seed, "channel"))[0]
        for k in range(n):
            rows.append([trace, k + 1, x[k].real, x[k].imag, y[k].real, y[k].imag])

    writer = ArtifactWriter(run, Provenance.for_run("simulate", run))
    writer.write_csv("simulate.csv", SIMULATE_COLUMNS, rows)
    return EXIT_OK


def cmd_mi(args: argparse.Namespace, run: RunConfig, metrics: RunMetrics) -> int:
    """Exact MI, duality upper estimate and analytic bound over the SNR list."""
    channel = run.channel_config()
    input_model = run.input_model()
    bound = _optional_bound(run, channel)

    if run.experiment.snr_db:
        snrs, in_db = run.experiment.snr_db, True
    else:
        snrs, in_db = [run.power() / run.channel.noise_var], False

    rows = mi_sweep(
        channel,
        input_model,
        run.experiment.n,
        snrs,
        run.experiment.samples,
        run.experiment.seed,
        bound=bound,
        snr_in_db=in_db,
        max_workers=args.workers,
        metrics=metrics,
    )

    writer = ArtifactWriter(run, Provenance.for_run("mi", run))
    writer.write_csv("mi.csv", SWEEP_COLUMNS, [row.values() for row in rows])
    if writer.wants_svg and not getattr(args, "no_svg", False):
        plot_sweep(rows, writer.path("mi.svg"), title=f"{run.channel.id}, n={run.experiment.n}")
    return EXIT_OK


def _parse_ks(text: str | None) -> list[int] | None:
    if not text:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise UsageError(f"--ks must be comma-separated integers, got {text!r}") from e


def cmd_verify(args: argparse.Namespace, run: RunConfig, metrics: RunMetrics) -> int:
    """Proof-chain audit; exit code 2 when any inequality fails."""
    channel = run.channel_config()
    _require_bounded(channel)
    epsilon = run.epsilon_term()

    if isinstance(epsilon, MissingEpsilon):
        params = fixed_bound_params(channel, epsilon=epsilon, horizon=run.bound.horizon)
    else:
        params = evaluate_bound(channel, run.grid(), epsilon, run.bound.horizon).params

    logger.info(f"Auditing at P = {channel.power:.6g} (SNR {linear_to_db(channel.snr):.1f} dB)")
    ks = _parse_ks(args.ks) or run.experiment.audit_points
    report = verify_proof_chain(
        channel,
        run.input_model(),
        params,
        run.experiment.n,
        run.experiment.samples,
        run.experiment.seed,
        ks=ks,
        rhs_offset=args.rhs_offset,
        max_workers=args.workers,
        metrics=metrics,
    )

    writer = ArtifactWriter(run, Provenance.for_run("verify", run))
    writer.write_csv("verify.csv", VERIFY_COLUMNS, report_rows(report))
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(format_report_console(report))

    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "classify": cmd_classify,
    "bound": cmd_bound,
    "simulate": cmd_simulate,
    "mi": cmd_mi,
    "verify": cmd_verify,
}

USAGE_ERRORS = (RunConfigError, UsageError, BoundError, AuditPointError)
