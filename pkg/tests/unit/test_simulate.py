"""
Unit tests for the channel simulator, joint draws and sweep charts.
"""

import numpy as np
import pytest

from channel.gaussian import output_power
from estimation import OnOff, SweepRow, draw_joint, simulate_channel
from estimation.results import EstimatorKind, MIEstimate
from experiments.charts import plot_sweep


class TestSimulateChannel:
    """Test the tap-path simulator."""

    def test_shapes(self, geometric_config):
        y = simulate_channel(geometric_config, np.ones(5), seed=1, trials=3)

        assert y.shape == (3, 5)

    def test_zero_input_gives_noise(self, geometric_config):
        y = simulate_channel(geometric_config, np.zeros(4), seed=2, trials=20_000)

        assert np.mean(np.abs(y) ** 2) == pytest.approx(1.0, rel=0.03)

    def test_output_power_matches_covariance_diagonal(self, geometric_config):
        x = np.array([1.0, 2.0, 0.0, 1.0j])
        y = simulate_channel(geometric_config, x, seed=3, trials=40_000)

        expected = output_power(geometric_config, x)
        np.testing.assert_allclose(np.mean(np.abs(y) ** 2, axis=0), expected, rtol=0.05)

    def test_seed_reproducible(self, geometric_config):
        first = simulate_channel(geometric_config, np.ones(3), seed=4)
        second = simulate_channel(geometric_config, np.ones(3), seed=4)

        np.testing.assert_array_equal(first, second)

    def test_row_count_mismatch(self, geometric_config):
        with pytest.raises(ValueError):
            simulate_channel(geometric_config, np.ones((2, 3)), seed=5, trials=3)


class TestDrawJoint:
    """Test exact conditional draws."""

    def test_factorization_reproduces_outputs(self, geometric_config):
        joint = draw_joint(geometric_config, OnOff(0.5), 4, 50, np.random.default_rng(6))

        np.testing.assert_allclose(joint.y, np.einsum("cij,cj->ci", joint.factor, joint.whitened))
        assert joint.conditional_log_densities().shape == (50, 4)

    def test_conditional_variances_bounded_by_power(self, geometric_config):
        joint = draw_joint(geometric_config, OnOff(0.5), 4, 50, np.random.default_rng(7))

        power = output_power(geometric_config, joint.x)
        assert np.all(joint.conditional_variances <= power * (1 + 1e-12))
        assert np.all(joint.conditional_variances >= geometric_config.noise_var * (1 - 1e-12))


def _row(index, snr, mi):
    estimate = MIEstimate(mean=mi, std_error=0.01, samples=100, blocklength=4, seed=0, kind=EstimatorKind.EXACT_MC)
    return SweepRow(index=index, snr=snr, seed=index, mi=estimate, duality=None, bound=2.0, bound_chain_rule=2.5)


class TestPlotSweep:
    """Test SVG chart output."""

    def test_writes_svg(self, tmp_path):
        path = tmp_path / "mi.svg"

        assert plot_sweep([_row(0, 1.0, 0.3), _row(1, 10.0, 0.6)], str(path), title="test")

        assert "<svg" in path.read_text(encoding="utf-8")

    def test_identical_rows_give_identical_bytes(self, tmp_path):
        rows = [_row(0, 1.0, 0.3), _row(1, 100.0, 0.7)]

        plot_sweep(rows, str(tmp_path / "a.svg"))
        plot_sweep(rows, str(tmp_path / "b.svg"))

        assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()

    def test_empty_rows(self, tmp_path):
        assert not plot_sweep([], str(tmp_path / "empty.svg"))
        assert not (tmp_path / "empty.svg").exists()

    def test_unwritable_path(self, tmp_path):
        assert not plot_sweep([_row(0, 1.0, 0.3)], str(tmp_path / "missing" / "mi.svg"))
