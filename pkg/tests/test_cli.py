"""
Tests for the command line interface
"""

import json

import pytest
from click.testing import CliRunner

from sigma_delta_circle.cli import main, run
from sigma_delta_circle.shared.types import EXIT_CONFIG_ERROR, EXIT_OK

pytestmark = pytest.mark.integration


@pytest.fixture
def runner():
    return CliRunner()


class TestCommands:
    """Commands write their files and exit with the documented codes"""

    def test_help(self, runner):
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == EXIT_OK
        for command in ("figure1", "sweep", "quantize", "verify", "serve"):
            assert command in result.output

    def test_figure1(self, runner, tmp_path):
        result = runner.invoke(main, ["figure1", "--n", "301", "--order", "1", "--order", "2", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_OK, result.output
        assert "order 2: sup error" in result.output
        summary = json.loads((tmp_path / "figure1_summary.json").read_text())
        assert set(summary["orders"]) == {"1", "2"}

    def test_quantize(self, runner, tmp_path):
        result = runner.invoke(main, ["quantize", "--n", "101", "--order", "2", "--no-update", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_OK, result.output
        assert (tmp_path / "quantize_order2.csv").read_text().startswith("n,y,q,v,u\n")
        assert not (tmp_path / "quantize_order2_updated.csv").exists()

    def test_verify(self, runner, tmp_path):
        result = runner.invoke(main, ["verify", "--n", "601", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_OK, result.output
        assert "PASS parity_identity" in result.output
        assert "all checks passed" in result.output

    def test_small_sweep(self, runner, tmp_path):
        result = runner.invoke(
            main, ["sweep", "--sweep", "31,61,101,151,211,401", "--order", "1", "--out", str(tmp_path)]
        )
        assert result.exit_code in (EXIT_OK, 2), result.output
        assert (tmp_path / "sweep.csv").exists()
        assert "order1-updated: slope" in result.output

    def test_config_file(self, runner, tmp_path):
        config = tmp_path / "experiment.yaml"
        config.write_text(f"n: 101\norder: [1]\nout: {tmp_path / 'from-config'}\n")
        result = runner.invoke(main, ["quantize", "--config", str(config)])
        assert result.exit_code == EXIT_OK, result.output
        assert (tmp_path / "from-config" / "quantize_order1.csv").exists()

    def test_output_dir_from_environment(self, runner, tmp_path):
        result = runner.invoke(
            main, ["quantize", "--n", "101", "--order", "1"], env={"SIGMA_DELTA_OUTPUT_DIR": str(tmp_path / "env")}
        )
        assert result.exit_code == EXIT_OK, result.output
        assert (tmp_path / "env" / "quantize_order1.csv").exists()


class TestConfigurationErrors:
    """Invalid configuration exits with code 1"""

    def test_unknown_config_key(self, runner, tmp_path):
        config = tmp_path / "experiment.yaml"
        config.write_text("n: 101\nwindow: hann\n")
        result = runner.invoke(main, ["figure1", "--config", str(config), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR
        assert "window" in result.output

    def test_too_few_sweep_points(self, runner, tmp_path):
        result = runner.invoke(main, ["sweep", "--sweep", "301,601,1201", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_malformed_sweep(self, runner, tmp_path):
        result = runner.invoke(main, ["sweep", "--sweep", "301,lots", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_undersampled(self, runner, tmp_path):
        result = runner.invoke(main, ["figure1", "--n", "20", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_usage_error_through_entry_point(self, monkeypatch):
        monkeypatch.setattr("sys.argv", ["sigma-delta-circle", "figure1", "--bogus"])
        with pytest.raises(SystemExit) as exc:
            run()
        assert exc.value.code == EXIT_CONFIG_ERROR
