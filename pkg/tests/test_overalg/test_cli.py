"""
test_overalg.test_cli
=====================

Tests for the command-line interface.

See Also
--------
overalg.cli
"""
import csv
import json

import pytest
from typer.testing import CliRunner

from overalg import __version__
from overalg.cli import DENSITY_COLUMNS, app
from overalg.verification.report import CheckRecord, SuiteReport

runner = CliRunner()


def _rows(text):
    return list(csv.reader(text.splitlines()))


# --- Root -----------------------------------------------------------------------------------------

@pytest.mark.parametrize("flag", ["--version", "-V"])
def test_version(flag):
    result = runner.invoke(app, [flag])
    assert result.exit_code == 0
    assert result.output.strip() == __version__

def test_info():
    result = runner.invoke(app, ["info"])
    assert result.exit_code == 0
    assert "overalg" in result.output
    assert "numpy" in result.output


# --- Verify ---------------------------------------------------------------------------------------

class TestVerify:
    """Tests for the verify command."""

    def test_invalid_alpha(self):
        result = runner.invoke(app, ["verify", "--suite", "eigen", "--alpha", "0.5"])
        assert result.exit_code == 2

    def test_invalid_s_max(self):
        result = runner.invoke(app, ["verify", "--suite", "eigen", "--s-max", "big"])
        assert result.exit_code == 2

    def test_unknown_suite(self):
        result = runner.invoke(app, ["verify", "--suite", "fourier"])
        assert result.exit_code == 2

    def test_unknown_key_in_config(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("alpha: 2.0\nwidth: 3\n", encoding="utf-8")
        result = runner.invoke(app, ["verify", "--suite", "eigen", "--config", str(path)])
        assert result.exit_code == 2

    def test_eigen_writes_report(self, tmp_path):
        path = tmp_path / "out" / "report.json"
        result = runner.invoke(app, ["verify", "--suite", "eigen", "--num-points", "20",
                                     "--seed", "3", "--output", str(path)])
        assert result.exit_code == 0, result.output
        assert "Q0 g_k" in result.output
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["passed"] is True
        assert data["seed"] == 3
        assert data["config"]["num_points"] == 20
        assert [s["suite"] for s in data["suites"]] == ["eigen"]

    def test_config_file_values(self, tmp_path):
        config = tmp_path / "run.yaml"
        output = tmp_path / "report.json"
        config.write_text(f"run:\n  alpha: 2.5\n  output: {output}\n", encoding="utf-8")
        result = runner.invoke(app, ["verify", "--suite", "eigen", "--config", str(config),
                                     "--num-points", "5"])
        assert result.exit_code == 0, result.output
        assert json.loads(output.read_text(encoding="utf-8"))["config"]["alpha"] == 2.5

    def test_failure_exit_code(self, mocker):
        record = CheckRecord(pair="M0/Q0", alpha=2.0, num_points=1, max_residual=1.0,
                             pole_margin=0.05, seed=0, passed=False)
        run = mocker.patch("overalg.cli.run_suites",
                           return_value=[SuiteReport("intertwine", [record], False)])
        result = runner.invoke(app, ["verify", "--suite", "intertwine"])
        assert result.exit_code == 1
        assert "FAIL" in result.output
        run.assert_called_once()

    def test_numerics_error_reported(self, tmp_path):
        """A truncation failing its tail bound fails the run instead of crashing it."""
        path = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", "--suite", "parseval", "--s-max", "1",
                                     "--degree", "2", "--output", str(path)])
        assert result.exit_code == 1, result.output
        assert result.exception is None or isinstance(result.exception, SystemExit)
        assert "aborted" in result.output
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["passed"] is False
        record = data["suites"][0]["records"][0]
        assert record["details"]["error"] == "TailBoundError"
        assert record["details"]["message"]
        assert record["max_residual"] is None

    def test_suite_from_config(self, tmp_path, mocker):
        config = tmp_path / "run.yaml"
        config.write_text("run:\n  suite: hahn\n", encoding="utf-8")
        run = mocker.patch("overalg.cli.run_suites", return_value=[])
        result = runner.invoke(app, ["verify", "--config", str(config)])
        assert result.exit_code == 0, result.output
        assert run.call_args.args[0] == ["hahn"]

    def test_suite_flag_over_config(self, tmp_path, mocker):
        config = tmp_path / "run.yaml"
        config.write_text("run:\n  suite: hahn\n", encoding="utf-8")
        run = mocker.patch("overalg.cli.run_suites", return_value=[])
        runner.invoke(app, ["verify", "--config", str(config), "--suite", "eigen"])
        assert run.call_args.args[0] == ["eigen"]


# --- Density --------------------------------------------------------------------------------------

class TestDensity:
    """Tests for the density command."""

    def test_columns(self):
        result = runner.invoke(app, ["density", "--alpha", "2.0", "--start", "0", "--stop", "5",
                                     "--num", "11"])
        assert result.exit_code == 0
        rows = _rows(result.output)
        assert tuple(rows[0]) == DENSITY_COLUMNS
        assert len(rows) == 12
        assert float(rows[1][1]) == 0.0
        for row in rows[1:]:
            s, left, right, diff = map(float, row)
            assert diff <= 1e-12 * max(left, right)
            assert left >= 0

    def test_header_only(self):
        result = runner.invoke(app, ["density", "--num", "0"])
        assert result.exit_code == 0
        assert _rows(result.output) == [list(DENSITY_COLUMNS)]

    def test_to_file(self, tmp_path):
        path = tmp_path / "density.csv"
        result = runner.invoke(app, ["density", "--num", "3", "--output", str(path)])
        assert result.exit_code == 0
        assert len(_rows(path.read_text(encoding="utf-8"))) == 4
        assert result.output == ""

    @pytest.mark.parametrize("args", [
        ["--stop", "60"],
        ["--start", "-1"],
        ["--alpha", "1.0"],
        ["--num", "-2"],
    ])
    def test_invalid(self, args):
        result = runner.invoke(app, ["density", *args])
        assert result.exit_code == 2

    def test_alpha_from_config(self, tmp_path):
        config = tmp_path / "run.yaml"
        config.write_text("run:\n  alpha: 3.5\n", encoding="utf-8")
        from_file = runner.invoke(app, ["density", "--num", "5", "--config", str(config)])
        from_flag = runner.invoke(app, ["density", "--num", "5", "--alpha", "3.5"])
        default = runner.invoke(app, ["density", "--num", "5"])
        assert from_file.exit_code == 0, from_file.output
        assert from_file.output == from_flag.output
        assert from_file.output != default.output

    def test_flag_over_config(self, tmp_path):
        config = tmp_path / "run.yaml"
        config.write_text("run:\n  alpha: 3.5\n", encoding="utf-8")
        result = runner.invoke(app, ["density", "--num", "5", "--config", str(config),
                                     "--alpha", "2.0"])
        assert result.output == runner.invoke(app, ["density", "--num", "5"]).output

    def test_invalid_config(self, tmp_path):
        config = tmp_path / "run.yaml"
        config.write_text("run:\n  alpha: 0.5\n", encoding="utf-8")
        result = runner.invoke(app, ["density", "--config", str(config)])
        assert result.exit_code == 2
