"""
Unit tests for the proof-chain audit and its report formatters.
"""

import csv
import json

import numpy as np

import pytest

from bounds import MissingEpsilon, fixed_bound_params
from estimation import AuditPointError, OnOff, Verdict, verify_proof_chain
from estimation.verify import (
    CSV_COLUMNS,
    InequalityCheck,
    VerifyReport,
    export_report_csv,
    export_report_json,
    format_report_console,
)
from estimation.verify.generator import _stochastic_check, default_audit_points

EULER_GAMMA = 0.5772156649015329


@pytest.fixture
def params(geometric_config):
    return fixed_bound_params(geometric_config)


class TestAuditPoints:
    """Test the default audit indices."""

    def test_default_points(self):
        assert default_audit_points(1, 6) == [1, 2, 6]
        assert default_audit_points(3, 4) == [1, 2, 3, 4]

    def test_needs_k_above_ell0(self):
        with pytest.raises(AuditPointError):
            default_audit_points(2, 2)

    def test_points_outside_range(self, geometric_config, params):
        with pytest.raises(AuditPointError):
            verify_proof_chain(geometric_config, OnOff(0.5), params, 4, 100, seed=1, ks=[5])


class TestVerifyProofChain:
    """Test the audit on the geometric reference channel."""

    def test_reference_channel_passes(self, geometric_config, params):
        report = verify_proof_chain(geometric_config, OnOff(0.5), params, 6, 4000, seed=11)

        assert report.status == Verdict.PASS
        assert report.ell0 == 1
        steps = [(check.k, check.inequality) for check in report.checks]
        assert steps[0] == (1, "firstl")
        assert [step for k, step in steps if k == 6] == ["U1", "U2", "U3", "U4", "U5"]

    def test_zero_power_margin_is_euler_gamma(self, geometric_config, params):
        report = verify_proof_chain(geometric_config.with_power(0.0), OnOff(0.5), params, 3, 20_000, seed=12, ks=[2])

        u1 = next(check for check in report.checks if check.inequality == "U1")
        assert u1.rhs == pytest.approx(0.0, abs=1e-12)
        assert u1.rhs - u1.lhs == pytest.approx(EULER_GAMMA, abs=5 * u1.lhs_se)
        assert u1.verdict == Verdict.PASS

    def test_adversarial_offset_fails_every_row(self, geometric_config, params):
        report = verify_proof_chain(geometric_config, OnOff(0.5), params, 6, 2000, seed=13, rhs_offset=10.0)

        assert report.status == Verdict.FAIL
        assert all(check.verdict == Verdict.FAIL for check in report.checks)
        assert not report.passed

    def test_missing_epsilon_skips_u5(self, geometric_config):
        params = fixed_bound_params(geometric_config, epsilon=MissingEpsilon())

        report = verify_proof_chain(geometric_config, OnOff(0.5), params, 4, 1000, seed=14, ks=[2, 4])

        skipped = report.skipped
        assert [(check.inequality, check.k) for check in skipped] == [("U5", 2), ("U5", 4)]
        assert skipped[0].note == "no ε term configured"
        assert report.status == Verdict.PASS
        assert "2 skipped" in report.summary()

    def test_same_seed_same_rows(self, geometric_config, params):
        first = verify_proof_chain(geometric_config, OnOff(0.5), params, 4, 600, seed=15)
        second = verify_proof_chain(geometric_config, OnOff(0.5), params, 4, 600, seed=15, max_workers=4)

        assert first.checks == second.checks

    def test_large_alphabet_falls_back_to_closed_form(self, geometric_config, params):
        from estimation import PSK

        report = verify_proof_chain(geometric_config, PSK(16), params, 6, 200, seed=16, ks=[1, 2])

        first = report.checks[0]
        assert first.inequality == "firstl"
        assert first.note == "deterministic"
        assert first.verdict == Verdict.PASS

    def test_too_few_samples(self, geometric_config, params):
        from estimation import EstimationError

        with pytest.raises(EstimationError):
            verify_proof_chain(geometric_config, OnOff(0.5), params, 4, 1, seed=0)


def _report(verdicts):
    checks = [
        InequalityCheck(
            inequality=f"U{index + 1}",
            k=2,
            lhs=None if verdict == Verdict.SKIPPED else 0.5,
            lhs_se=None if verdict == Verdict.SKIPPED else 0.01,
            rhs=None if verdict == Verdict.SKIPPED else (1.0 if verdict == Verdict.PASS else 0.0),
            rhs_se=None if verdict == Verdict.SKIPPED else 0.0,
            margin_se=None if verdict == Verdict.SKIPPED else (50.0 if verdict == Verdict.PASS else -50.0),
            verdict=verdict,
            note="no ε term configured" if verdict == Verdict.SKIPPED else "3σ paired",
        )
        for index, verdict in enumerate(verdicts)
    ]
    return VerifyReport(checks=checks, blocklength=4, samples=100, seed=7, ell0=1)


class TestStochasticCheck:
    """Test the paired comparison behind every sampled row."""

    def test_margin_uses_paired_difference(self):
        rng = np.random.default_rng(11)
        shared = rng.standard_normal(10_000)
        lhs = shared
        rhs = shared - 0.02 + 0.01 * rng.standard_normal(10_000)

        check = _stochastic_check("U1", 1, lhs, rhs, rhs_offset=0.0)

        gap = float(np.mean(rhs) - np.mean(lhs))
        paired_se = float(np.std(rhs - lhs, ddof=1) / np.sqrt(10_000))
        assert check.margin_se == pytest.approx(gap / paired_se, rel=1e-9)
        # Against √(se_lhs² + se_rhs²) the same gap is inside 3σ
        assert gap / np.hypot(check.lhs_se, check.rhs_se) > -3.0
        assert check.verdict == Verdict.FAIL

    def test_identical_sides_pass(self):
        values = np.linspace(0.0, 1.0, 50)

        check = _stochastic_check("U1", 1, values, values.copy(), rhs_offset=0.0)

        assert check.margin_se is None
        assert check.verdict == Verdict.PASS


class TestVerifyFormatters:
    """Test the report exports."""

    def test_console_report(self):
        text = format_report_console(_report([Verdict.PASS, Verdict.FAIL, Verdict.SKIPPED]))

        assert "PROOF-CHAIN AUDIT" in text
        assert "Status: FAIL" in text
        assert "VIOLATIONS" in text
        assert "U2 at k=2" in text
        assert "(no ε term configured)" in text

    def test_console_report_without_failures(self):
        text = format_report_console(_report([Verdict.PASS]))

        assert "Status: PASS" in text
        assert "VIOLATIONS" not in text

    def test_csv_export(self, tmp_path):
        path = tmp_path / "verify.csv"

        export_report_csv(_report([Verdict.PASS, Verdict.SKIPPED]), str(path), comments=["tool=test"])

        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# tool=test"
        rows = list(csv.reader(lines[1:]))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert rows[1] == ["U1", "2", "0.5", "0.01", "1.0", "0.0", "50.0", "PASS"]
        assert rows[2] == ["U2", "2", "", "", "", "", "", "SKIPPED"]

    def test_json_export(self, tmp_path):
        path = tmp_path / "verify.json"

        export_report_json(_report([Verdict.FAIL]), str(path))

        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["status"] == "FAIL"
        assert data["failures"] == 1
        assert data["checks"][0]["margin_se"] == -50.0

    def test_check_serialization(self):
        check = _report([Verdict.PASS]).checks[0]

        assert check.passed
        assert check.to_dict()["verdict"] == "PASS"
