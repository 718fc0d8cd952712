"""
Desk-scale acceptance runs.

These exercise the estimators at full sample sizes and take minutes,
so they are marked ``slow``:

    pytest tests/integration -m slow
"""

import logging
import math

import numpy as np
import pytest

from bounds import evaluate_bound
from channel import ChannelConfig, DecayProfile, GeometricTail, TapAssignment, ZeroTail
from channel.gaussian import schur_conditional_entropies
from estimation import OnOff, Verdict, duality_upper_bound, estimate_mutual_information, mi_sweep, verify_proof_chain
from experiments.cli import EXIT_OK, run

pytestmark = [pytest.mark.slow, pytest.mark.integration]

SNR_DB = [0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0]
SAMPLES = 200_000
SEED = 20240611


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def _combined(first, second):
    return math.hypot(first.std_error, second.std_error)


@pytest.fixture(scope="module")
def geometric_rows():
    config = ChannelConfig(
        profile=DecayProfile((1.0,), GeometricTail(0.5)),
        taps=TapAssignment.uniform(0.5),
        blocklength=6,
    )
    bound = evaluate_bound(config)
    return mi_sweep(config, OnOff(0.5), 6, SNR_DB, SAMPLES, SEED, bound=bound)


@pytest.fixture(scope="module")
def finite_memory_rows():
    config = ChannelConfig(profile=DecayProfile((1.0,), ZeroTail()), taps=TapAssignment((0.0,)), blocklength=6)
    return mi_sweep(config, OnOff(0.5), 6, SNR_DB, SAMPLES, SEED)


class TestSaturation:
    """Geometric profile: MI flattens and stays below the bound."""

    def test_high_snr_gain_is_small(self, geometric_rows):
        by_db = {round(row.snr_db): row.mi for row in geometric_rows}

        assert by_db[60].mean - by_db[30].mean < 0.2

    def test_mi_below_bound(self, geometric_rows):
        for row in geometric_rows:
            assert row.mi.mean <= row.bound
            assert row.mi.mean <= row.duality.mean + 3.0 * _combined(row.mi, row.duality)

    def test_increments_do_not_grow(self, geometric_rows):
        mis = [row.mi for row in geometric_rows]
        for lower, middle, upper in zip(mis, mis[1:], mis[2:]):
            noise = 3.0 * math.sqrt(lower.std_error ** 2 + 4 * middle.std_error ** 2 + upper.std_error ** 2)
            assert (upper.mean - middle.mean) <= (middle.mean - lower.mean) + noise


class TestGrowth:
    """Finite-memory profile: MI keeps increasing with SNR."""

    def test_high_snr_gain(self, finite_memory_rows):
        by_db = {round(row.snr_db): row.mi for row in finite_memory_rows}

        assert by_db[60].mean > by_db[30].mean + 3.0 * _combined(by_db[60], by_db[30])

    def test_increases_every_decade(self, finite_memory_rows):
        mis = [row.mi for row in finite_memory_rows]
        for lower, upper in zip(mis, mis[1:]):
            assert upper.mean - lower.mean > _combined(lower, upper)

    def test_no_bound_columns(self, finite_memory_rows):
        assert all(row.bound is None and row.duality is None for row in finite_memory_rows)


class TestProofChainAudit:
    """Every audited inequality holds on randomized Bounded channels."""

    @pytest.mark.parametrize("case", range(20))
    def test_randomized_config(self, case):
        rng = np.random.default_rng(1000 + case)
        ratio = float(rng.uniform(0.3, 0.9))
        coefficient = float(rng.uniform(0.0, 0.8))
        snr_db = float(rng.uniform(0.0, 50.0))
        n = int(rng.integers(3, 9))
        config = ChannelConfig(
            profile=DecayProfile((1.0,), GeometricTail(ratio)),
            taps=TapAssignment.uniform(coefficient),
            power=10.0 ** (snr_db / 10.0),
            blocklength=n,
        )
        params = evaluate_bound(config).params

        report = verify_proof_chain(config, OnOff(0.5), params, n, 4000, seed=case)

        failures = [(check.inequality, check.k, check.margin_se) for check in report.failures]
        assert report.status == Verdict.PASS, failures


class TestDualityAndChainRule:
    """Duality terms dominate the exact conditional terms on the reference channel."""

    def test_reference_channel(self):
        n = 6
        config = ChannelConfig(
            profile=DecayProfile((1.0,), GeometricTail(0.5)),
            taps=TapAssignment.uniform(0.5),
            power=100.0,
            blocklength=n,
        )
        params = evaluate_bound(config).params

        exact = estimate_mutual_information(config, OnOff(0.5), n, 50_000, seed=1)
        duality = duality_upper_bound(config, OnOff(0.5), n, params, 50_000, seed=2)

        for term in duality.terms:
            matching = exact.terms[term.k - 1]
            assert term.mean >= matching.mean - 3.0 * _combined(term, matching)
        total = sum(term.mean for term in exact.terms)
        assert total == pytest.approx(n * exact.total.mean, abs=3.0 * n * exact.total.std_error)


class TestGaussianOracle:
    def test_schur_matches_determinant_ratios(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            n = int(rng.integers(1, 9))
            factor = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            sigma = factor @ factor.conj().T + np.eye(n)

            chain = schur_conditional_entropies(sigma)

            logdets = [0.0] + [float(np.linalg.slogdet(sigma[:k, :k])[1]) for k in range(1, n + 1)]
            brute = [math.log(math.pi * math.e) + logdets[k] - logdets[k - 1] for k in range(1, n + 1)]
            np.testing.assert_allclose(chain.terms, brute, rtol=1e-10, atol=1e-12)


class TestReproducibility:
    """Identical (config, seed) give byte-identical CSVs for any worker count."""

    @pytest.mark.parametrize("command", ["mi", "verify"])
    def test_worker_counts(self, command, run_config_file, tmp_path):
        path = tmp_path / "out" / f"{command}.csv"
        extra = ["--no-svg"] if command == "mi" else []

        assert run([command, str(run_config_file), "--samples", "5000", "--workers", "1", *extra]) == EXIT_OK
        single = path.read_bytes()
        assert run([command, str(run_config_file), "--samples", "5000", "--workers", "8", *extra]) == EXIT_OK

        assert path.read_bytes() == single

    def test_seed_changes_output(self, run_config_file, tmp_path):
        path = tmp_path / "out" / "mi.csv"

        run(["mi", str(run_config_file), "--samples", "500", "--no-svg", "--seed", "1"])
        first = path.read_bytes()
        run(["mi", str(run_config_file), "--samples", "500", "--no-svg", "--seed", "2"])

        assert path.read_bytes() != first
