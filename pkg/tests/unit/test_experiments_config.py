"""
Unit tests for run configuration loading and artifact provenance.
"""

import pytest

from bounds import ConstantEpsilon, MissingEpsilon, SmallBallEpsilon, TableEpsilon
from channel import GeometricTail
from estimation import PSK, OnOff
from experiments import ArtifactWriter, RunConfig, RunConfigError
from experiments.output import Provenance


def _minimal(**experiment):
    return {
        "schema": 1,
        "channel": {"profile": {"head": [1.0], "tail": {"kind": "geometric", "ratio": 0.5}}, "taps": {"default": 0.5}},
        "experiment": {"n": 4, **experiment},
    }


class TestRunConfigLoading:
    """Test YAML loading and schema checks."""

    def test_load_reference_config(self, configs_dir):
        config = RunConfig.load(configs_dir / "geometric_reference.yaml")

        assert config.channel.id == "geometric-reference"
        assert config.experiment.n == 6
        assert isinstance(config.channel.profile.build().tail, GeometricTail)
        assert [name for name, _ in config.named_profiles()] == [
            "geometric-reference",
            "finite-memory",
            "double-exponential",
            "super-double-exponential",
        ]

    def test_dump_loads_back_equal(self, configs_dir, tmp_path):
        config = RunConfig.load(configs_dir / "geometric_reference.yaml")
        path = tmp_path / "copy.yaml"
        path.write_text(config.dump(), encoding="utf-8")

        assert RunConfig.load(path) == config

    def test_unknown_key_rejected(self):
        data = _minimal()
        data["experiment"]["blocklen"] = 3

        with pytest.raises(RunConfigError) as exc_info:
            RunConfig.from_dict(data)

        assert any(issue.startswith("experiment.blocklen") for issue in exc_info.value.issues)

    def test_errors_carry_field_paths(self):
        data = _minimal(samples=1)
        data["channel"]["profile"]["tail"] = {"kind": "geometric"}

        with pytest.raises(RunConfigError) as exc_info:
            RunConfig.from_dict(data)

        paths = [issue.split(":")[0] for issue in exc_info.value.issues]
        assert "experiment.samples" in paths
        assert any(path.startswith("channel.profile.tail.geometric.ratio") for path in paths)

    def test_power_and_snr_are_exclusive(self):
        with pytest.raises(RunConfigError):
            RunConfig.from_dict(_minimal(power=1.0, snr_db=[0.0]))

    def test_wrong_schema_version(self):
        data = _minimal()
        data["schema"] = 2

        with pytest.raises(RunConfigError):
            RunConfig.from_dict(data)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("channel: [unclosed\n", encoding="utf-8")

        with pytest.raises(RunConfigError, match="invalid YAML"):
            RunConfig.load(path)

    def test_not_a_mapping(self):
        with pytest.raises(RunConfigError, match="mapping"):
            RunConfig.from_dict([1, 2, 3])

    def test_duplicate_profile_ids(self):
        data = _minimal()
        data["profiles"] = [{"id": "a", "head": [1.0]}, {"id": "a", "head": [0.5]}]

        with pytest.raises(RunConfigError, match="unique"):
            RunConfig.from_dict(data)


class TestRunConfigBuilders:
    """Test conversion into domain objects."""

    def test_power_from_highest_snr_point(self):
        config = RunConfig.from_dict(_minimal(snr_db=[30.0, 0.0, 20.0]))

        assert config.power() == pytest.approx(1000.0)
        assert config.channel_config().snr == pytest.approx(1000.0)

    def test_reference_configs_audit_at_top_of_sweep(self, configs_dir):
        for name in ("geometric_reference.yaml", "finite_memory.yaml"):
            config = RunConfig.load(configs_dir / name)

            assert config.channel_config().snr == pytest.approx(1e6)

    def test_explicit_power(self):
        assert RunConfig.from_dict(_minimal(power=3.0)).power() == 3.0

    def test_channel_assumptions_reported_with_paths(self):
        data = _minimal(power=1.0)
        data["channel"]["noise_var"] = -1.0
        data["channel"]["taps"] = {"default": 1.5}

        with pytest.raises(RunConfigError) as exc_info:
            RunConfig.from_dict(data).channel_config()

        paths = {issue.split(":")[0] for issue in exc_info.value.issues}
        assert paths == {"channel.noise_var", "channel.taps"}

    def test_complex_tap_coefficients(self):
        data = _minimal()
        data["channel"]["taps"] = {"coefficients": [[0.3, 0.4]], "default": 0.0}

        taps = RunConfig.from_dict(data).channel.taps.build()

        assert taps.coefficient(0) == complex(0.3, 0.4)

    def test_input_models(self):
        assert RunConfig.from_dict(_minimal()).input_model() == OnOff(0.5)
        assert RunConfig.from_dict(_minimal(input={"kind": "psk", "order": 8})).input_model() == PSK(8)

    @pytest.mark.parametrize(
        "bound,expected",
        [
            ({}, SmallBallEpsilon),
            ({"epsilon": "constant", "epsilon_constant": 0.1}, ConstantEpsilon),
            ({"epsilon": "none"}, MissingEpsilon),
        ],
    )
    def test_epsilon_sources(self, bound, expected):
        data = _minimal()
        data["bound"] = bound

        assert isinstance(RunConfig.from_dict(data).epsilon_term(), expected)

    def test_epsilon_table(self, configs_dir):
        data = _minimal()
        data["bound"] = {"epsilon": "table", "epsilon_table": str(configs_dir / "epsilon_table.csv")}

        assert isinstance(RunConfig.from_dict(data).epsilon_term(), TableEpsilon)

    def test_constant_epsilon_needs_value(self):
        data = _minimal()
        data["bound"] = {"epsilon": "constant"}

        with pytest.raises(RunConfigError, match="epsilon_constant"):
            RunConfig.from_dict(data)

    def test_invalid_grid(self):
        data = _minimal()
        data["bound"] = {"deltas": [0.5], "etas": [1.5]}

        with pytest.raises(RunConfigError, match="bound.deltas/etas"):
            RunConfig.from_dict(data).grid()


class TestOverridesAndProvenance:
    """Test command-line overrides and CSV headers."""

    def test_overrides_change_digest(self):
        config = RunConfig.from_dict(_minimal(seed=1))

        overridden = config.with_overrides(seed=2, samples=50, out_dir="elsewhere")

        assert overridden.experiment.seed == 2
        assert overridden.experiment.samples == 50
        assert overridden.output.directory == "elsewhere"
        assert overridden.sha256() != config.sha256()

    def test_digest_is_stable(self):
        assert RunConfig.from_dict(_minimal()).sha256() == RunConfig.from_dict(_minimal()).sha256()

    def test_invalid_override(self):
        with pytest.raises(RunConfigError):
            RunConfig.from_dict(_minimal()).with_overrides(samples=1)

    def test_provenance_header(self):
        config = RunConfig.from_dict(_minimal(seed=9))

        header = Provenance.for_run("mi", config).header()

        assert header.startswith("tool=fadingcap version=")
        assert f"command=mi seed=9 config_sha256={config.sha256()}" in header

    def test_writer_output_matches_render(self, tmp_path):
        data = _minimal()
        data["output"] = {"directory": str(tmp_path / "out")}
        config = RunConfig.from_dict(data)
        writer = ArtifactWriter(config, Provenance.for_run("bound", config))

        path = writer.write_csv("table.csv", ("a", "b"), [[1, 0.5], [2, None]])

        with open(path, encoding="utf-8", newline="") as handle:
            written = handle.read()
        assert written == writer.render_csv(("a", "b"), [[1, 0.5], [2, None]])
        assert written.splitlines()[1:] == ["a,b", "1,0.5", "2,"]
        assert writer.written == [path]
        assert not writer.wants_svg
