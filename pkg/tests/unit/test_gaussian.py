"""
Unit tests for the Gaussian machinery: autocovariances, conditional
covariances, Schur conditional entropies and tap-path sampling.
"""

import math

import mpmath
import numpy as np
import pytest

from channel import ChannelConfig, DecayProfile, FactorizationError, GeometricTail, TapAssignment, TapProcess
from channel import EntropyRateUndefinedError
from channel.gaussian import (
    LOG_PI_E,
    autocovariance,
    autocovariance_matrix,
    cholesky_factor,
    complex_normal,
    conditional_cov,
    entropy_rate,
    output_power,
    regularity_constant,
    sample_tap_paths,
    schur_conditional_entropies,
)


class TestAutocovariance:
    """Test AR(1) autocovariances."""

    def test_lags(self):
        tap = TapProcess(0.5, 1.0)

        assert autocovariance(tap, 0) == 1.0
        assert autocovariance(tap, 3) == pytest.approx(0.125)

    def test_negative_lag_is_conjugate(self):
        tap = TapProcess(0.6j, 2.0)

        assert autocovariance(tap, -2) == pytest.approx(np.conj(autocovariance(tap, 2)))

    def test_matrix_is_hermitian_toeplitz(self):
        tap = TapProcess(0.3 + 0.4j, 1.5)
        matrix = autocovariance_matrix(tap, 5)

        assert np.allclose(matrix, matrix.conj().T)
        for k in range(5):
            for j in range(5):
                assert matrix[k, j] == pytest.approx(autocovariance(tap, k - j))


class TestEntropyRate:
    """Test entropy rates and the regularity constant."""

    def test_iid_tap_entropy_rate(self):
        assert entropy_rate(TapProcess(0.0, 2.0)) == pytest.approx(math.log(math.pi * math.e * 2.0))

    def test_unit_modulus_gives_minus_infinity(self):
        assert entropy_rate(TapProcess(1.0, 1.0)) == -math.inf

    def test_zero_variance_is_undefined(self):
        with pytest.raises(EntropyRateUndefinedError):
            entropy_rate(TapProcess(0.5, 0.0))

    def test_regularity_iid_is_log_pi_e(self, finite_memory_config):
        assert regularity_constant(finite_memory_config) == pytest.approx(LOG_PI_E)

    def test_regularity_matches_high_precision(self, geometric_config):
        expected = float(mpmath.log(mpmath.pi * mpmath.e * (1 - mpmath.mpf("0.25"))))

        assert regularity_constant(geometric_config) == pytest.approx(expected, rel=1e-14)

    def test_regularity_never_exceeds_log_pi_e(self, geometric_config):
        assert regularity_constant(geometric_config) <= LOG_PI_E


class TestConditionalCovariance:
    """Test Σ(x) and its diagonal."""

    def test_iid_taps_are_diagonal(self):
        config = ChannelConfig(profile=DecayProfile((1.0, 0.5)), taps=TapAssignment.uniform(0.0), noise_var=1.0)

        sigma = conditional_cov(config, np.array([1.0, 1.0]))

        assert np.allclose(sigma, np.diag([2.0, 2.5]))

    def test_diagonal_is_output_power(self, geometric_config):
        rng = np.random.default_rng(3)
        x = complex_normal(rng, (4, 6), 2.0)

        sigma = conditional_cov(geometric_config, x)
        diagonal = np.real(np.diagonal(sigma, axis1=-2, axis2=-1))

        assert np.allclose(diagonal, output_power(geometric_config, x))

    def test_zero_input_gives_noise_only(self, geometric_config):
        sigma = conditional_cov(geometric_config, np.zeros(5))

        assert np.allclose(sigma, np.eye(5))

    def test_covariance_is_positive_definite(self, geometric_config):
        x = complex_normal(np.random.default_rng(1), (6,), 10.0)

        eigenvalues = np.linalg.eigvalsh(conditional_cov(geometric_config, x))

        assert eigenvalues.min() >= geometric_config.noise_var * (1 - 1e-9)


class TestSchurEntropies:
    """Test the chain-rule decomposition against determinants."""

    def test_terms_sum_to_joint_entropy(self, geometric_config):
        x = complex_normal(np.random.default_rng(5), (6,), 10.0)
        chain = schur_conditional_entropies(conditional_cov(geometric_config, x), geometric_config.noise_var)

        assert chain.total == pytest.approx(chain.joint, rel=1e-10)

    def test_conditional_variance_is_determinant_ratio(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        sigma = a @ a.conj().T + np.eye(4)

        chain = schur_conditional_entropies(sigma)

        for k in range(1, 4):
            ratio = np.linalg.det(sigma[: k + 1, : k + 1]).real / np.linalg.det(sigma[:k, :k]).real
            assert chain.conditional_variances[k] == pytest.approx(ratio, rel=1e-10)

    def test_singular_matrix_rejected(self):
        with pytest.raises(FactorizationError):
            cholesky_factor(np.zeros((3, 3)))


class TestTapPaths:
    """Test stationary tap-path sampling."""

    def test_shape_and_inactive_paths(self):
        config = ChannelConfig(profile=DecayProfile((1.0, 0.0, 0.5)), taps=TapAssignment.uniform(0.5))

        paths = sample_tap_paths(config, 4, 10, 0)

        assert paths.shape == (10, 4, 4)
        assert np.all(paths[:, :, 1] == 0)
        assert np.all(paths[:, :, 3] == 0)

    def test_stationary_variance_and_correlation(self):
        config = ChannelConfig(profile=DecayProfile((1.0,), GeometricTail(0.5)), taps=TapAssignment.uniform(0.5))
        count = 40_000

        paths = sample_tap_paths(config, 3, count, 2)
        delay0 = paths[:, :, 0]

        # Var = 1 at every time step, lag-1 correlation 0.5
        for k in range(3):
            assert np.mean(np.abs(delay0[:, k]) ** 2) == pytest.approx(1.0, abs=0.03)
        lag1 = np.mean(delay0[:, 1] * np.conj(delay0[:, 0]))
        assert lag1.real == pytest.approx(0.5, abs=0.03)

    def test_same_seed_same_paths(self, geometric_config):
        first = sample_tap_paths(geometric_config, 4, 5, 99)
        second = sample_tap_paths(geometric_config, 4, 5, 99)

        assert np.array_equal(first, second)
