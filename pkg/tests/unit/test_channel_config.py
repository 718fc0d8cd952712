"""
Unit tests for channel configuration validation.
"""

import pytest

from channel import (
    ChannelConfig,
    ConfigValidationError,
    DecayProfile,
    GeometricTail,
    TapAssignment,
    ValidationIssue,
    collect_issues,
    validate_config,
)


def _config(**overrides) -> ChannelConfig:
    values = {
        "profile": DecayProfile((1.0,), GeometricTail(0.5)),
        "taps": TapAssignment.uniform(0.5),
        "noise_var": 1.0,
        "power": 10.0,
        "blocklength": 4,
    }
    values.update(overrides)
    return ChannelConfig(**values)


class TestValidateConfig:
    """Test validate_config and collect_issues."""

    def test_valid_config_passes(self):
        config = validate_config(_config())

        assert config.snr == pytest.approx(10.0)
        assert config.blocklength == 4

    def test_zero_noise_rejected_with_field_path(self):
        with pytest.raises(ConfigValidationError) as exc_info:
            validate_config(_config(noise_var=0.0))

        fields = [issue.field for issue in exc_info.value.issues]
        assert "channel.noise_var" in fields
        assert "noise variance must be positive" in str(exc_info.value)

    def test_unit_modulus_tap_rejected(self):
        issues = collect_issues(_config(taps=TapAssignment.uniform(1.0)))

        assert [issue.field for issue in issues] == ["channel.taps"]
        assert "−∞" in issues[0].message

    def test_unit_modulus_on_inactive_path_is_fine(self):
        config = _config(profile=DecayProfile((1.0, 0.0)), taps=TapAssignment(coefficients=(0.5, 1.0)))

        assert collect_issues(config) == []

    def test_every_issue_reported(self):
        issues = collect_issues(_config(noise_var=-1.0, power=-2.0, blocklength=0))

        assert {issue.field for issue in issues} == {
            "channel.noise_var",
            "experiment.power",
            "experiment.blocklength",
        }

    def test_non_integer_blocklength(self):
        issues = collect_issues(_config(blocklength=2.5))

        assert issues[0].field == "experiment.blocklength"

    def test_with_snr_keeps_noise(self):
        config = _config(noise_var=2.0).with_snr(5.0)

        assert config.power == pytest.approx(10.0)
        assert config.snr == pytest.approx(5.0)

    def test_issue_string_includes_value(self):
        issue = ValidationIssue("channel.noise_var", "noise variance must be positive", 0.0)

        assert str(issue) == "channel.noise_var: noise variance must be positive (got 0.0)"
