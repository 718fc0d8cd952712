"""
Unit tests for the fadingcap command-line interface.

Commands run in-process through ``experiments.cli.run`` against the
geometric reference config with a small sample budget.
"""

import csv
import json
import logging
import math

import pytest

from experiments.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, create_parser, run


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


def _read_csv(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    return lines[0], list(csv.DictReader(lines[1:]))


class TestParser:
    """Test argument parsing."""

    def test_common_options(self):
        args = create_parser().parse_args(["mi", "run.yaml", "--seed", "3", "--workers", "8", "--no-svg"])

        assert args.command == "mi"
        assert args.config == "run.yaml"
        assert args.seed == 3
        assert args.workers == 8
        assert args.no_svg

    def test_verify_options(self):
        args = create_parser().parse_args(["verify", "run.yaml", "--ks", "1,2", "--rhs-offset", "10"])

        assert args.ks == "1,2"
        assert args.rhs_offset == 10.0
        assert args.format == "console"

    def test_missing_command(self):
        assert run([]) == EXIT_USAGE

    def test_unknown_option(self):
        assert run(["mi", "run.yaml", "--bogus"]) == EXIT_USAGE


class TestClassifyAndBound:
    """Test the deterministic commands."""

    def test_classify(self, run_config_file, tmp_path, capsys):
        code = run(["classify", str(run_config_file)])

        assert code == EXIT_OK
        header, rows = _read_csv(tmp_path / "out" / "classify.csv")
        assert header.startswith("# tool=fadingcap version=")
        assert " command=classify seed=20240611 config_sha256=" in header
        classes = {row["profile"]: row["decay_class"] for row in rows}
        assert classes["geometric-reference"] == "Bounded"
        assert classes["finite-memory"] == "Unbounded"
        assert capsys.readouterr().out == (tmp_path / "out" / "classify.csv").read_text(encoding="utf-8")

    def test_bound(self, run_config_file, tmp_path):
        code = run(["bound", str(run_config_file)])

        assert code == EXIT_OK
        _, rows = _read_csv(tmp_path / "out" / "bound.csv")
        assert {row["n"] for row in rows} == {"10", "100", "1000", "1000000"}
        assert all(row["ell0"] == "1" for row in rows)
        assert all(row["epsilon_source"] == "small-ball" for row in rows)

    def test_bound_rejects_finite_memory(self, configs_dir, tmp_path):
        code = run(["bound", str(configs_dir / "finite_memory.yaml"), "--out-dir", str(tmp_path)])

        assert code == EXIT_USAGE
        assert not (tmp_path / "bound.csv").exists()

    def test_seed_override_lands_in_header(self, run_config_file, tmp_path):
        run(["classify", str(run_config_file), "--seed", "99"])

        header, _ = _read_csv(tmp_path / "out" / "classify.csv")
        assert " seed=99 " in header


class TestSimulate:
    def test_trace_rows(self, run_config_file, tmp_path):
        code = run(["simulate", str(run_config_file), "--seed", "3"])

        assert code == EXIT_OK
        _, rows = _read_csv(tmp_path / "out" / "simulate.csv")
        assert len(rows) == 4 * 6
        assert {row["x_re"] for row in rows} <= {"0.0", repr(math.sqrt(2.0))}


class TestMI:
    def test_sweep_csv(self, run_config_file, tmp_path):
        code = run(["mi", str(run_config_file), "--samples", "300", "--no-svg"])

        assert code == EXIT_OK
        _, rows = _read_csv(tmp_path / "out" / "mi.csv")
        assert [float(row["snr_db"]) for row in rows] == [0.0, 20.0]
        for row in rows:
            assert float(row["mi"]) <= float(row["bound"])
        assert not (tmp_path / "out" / "mi.svg").exists()

    def test_worker_count_does_not_change_bytes(self, run_config_file, tmp_path):
        path = tmp_path / "out" / "mi.csv"

        run(["mi", str(run_config_file), "--samples", "300", "--no-svg", "--workers", "1"])
        single = path.read_bytes()
        run(["mi", str(run_config_file), "--samples", "300", "--no-svg", "--workers", "8"])

        assert path.read_bytes() == single

    def test_svg_chart(self, run_config_file, tmp_path):
        code = run(["mi", str(run_config_file), "--samples", "200"])

        assert code == EXIT_OK
        assert (tmp_path / "out" / "mi.svg").read_text(encoding="utf-8").lstrip().startswith("<?xml")


class TestVerify:
    def test_passes_on_reference_channel(self, run_config_file, tmp_path, capsys):
        code = run(["verify", str(run_config_file), "--samples", "2000"])

        assert code == EXIT_OK
        assert "Status: PASS" in capsys.readouterr().out
        _, rows = _read_csv(tmp_path / "out" / "verify.csv")
        assert {row["verdict"] for row in rows} == {"PASS"}

    def test_rhs_offset_fails(self, run_config_file, capsys):
        code = run(["verify", str(run_config_file), "--samples", "1000", "--rhs-offset", "10", "--format", "json"])

        assert code == EXIT_VERIFY_FAILED
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "FAIL"
        assert report["failures"] == len(report["checks"])

    def test_explicit_points(self, run_config_file, tmp_path):
        run(["verify", str(run_config_file), "--samples", "500", "--ks", "2,4"])

        _, rows = _read_csv(tmp_path / "out" / "verify.csv")
        assert sorted({row["k"] for row in rows}) == ["2", "4"]

    def test_bad_points(self, run_config_file):
        assert run(["verify", str(run_config_file), "--ks", "0"]) == EXIT_USAGE
        assert run(["verify", str(run_config_file), "--ks", "two"]) == EXIT_USAGE


class TestConfigErrors:
    def test_malformed_config(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("schema: 1\nchannel: {profile: {head: []}}\nexperiment: {n: 0}\n", encoding="utf-8")

        assert run(["classify", str(path)]) == EXIT_USAGE

    def test_missing_config(self, tmp_path):
        assert run(["mi", str(tmp_path / "absent.yaml")]) == EXIT_USAGE

    def test_metrics_file(self, run_config_file, tmp_path):
        metrics_path = tmp_path / "metrics.prom"

        run(["classify", str(run_config_file), "--metrics-file", str(metrics_path)])

        assert 'fadingcap_runs_total{command="classify",status="success"}' in metrics_path.read_text(
            encoding="utf-8"
        )

    def test_json_log_file_carries_run_context(self, run_config_file, tmp_path):
        log_path = tmp_path / "logs" / "classify.jsonl"

        code = run(["classify", str(run_config_file), "--log-json", "--log-file", str(log_path)])

        assert code == EXIT_OK
        for handler in logging.getLogger().handlers:
            handler.flush()
        entries = [json.loads(line) for line in log_path.read_text(encoding="utf-8").splitlines()]
        assert any(entry["message"] == "geometric-reference: Bounded" for entry in entries)
        assert all(entry["context"]["command"] == "classify" for entry in entries)
        command_entries = [entry for entry in entries if entry["logger"] == "experiments.cli.commands"]
        assert {entry["context"].get("seed") for entry in command_entries} == {20240611}
