"""
Tests for experiment configuration, report rendering and the experiment runners
"""

import io
import json

import numpy as np
import pandas as pd
import pytest

from sigma_delta_circle.features.harness import (
    CheckResult,
    ExperimentConfig,
    HarnessEngine,
    dump_traces,
    load_experiment_config,
    random_bounded_signal,
    render_csv,
    render_json,
    render_line_plot,
    run_decay_sweep,
    run_figure1,
    run_verification,
    spike_ratio,
    verification_result,
    write_bundle,
    write_bundle_async,
)
from sigma_delta_circle.features.bandlimited import sample
from sigma_delta_circle.shared.errors import ConfigError, ReportWriteError
from sigma_delta_circle.shared.types import EXIT_ACCEPTANCE_FAILURE, EXIT_OK, CheckStatus

FIGURE1_COLUMNS = ["t", "f", "f_r", "f_tilde_r", "f_minus_f_r", "f_minus_f_tilde_r", "e_tilde"]

# ============================================================================
# CONFIGURATION
# ============================================================================


class TestExperimentConfig:
    """YAML configs and overrides"""

    def test_defaults(self):
        config = ExperimentConfig()
        assert config.n == 9002
        assert config.orders == (1, 2)
        assert config.update

    def test_default_sweep_values(self):
        assert ExperimentConfig().sweep_values() == [301, 601, 1201, 2401, 4801, 9601]

    def test_explicit_sweep_sorted(self):
        assert ExperimentConfig(sweep=(900, 100)).sweep_values() == [100, 900]

    def test_zero_bandwidth_sweep_needs_values(self):
        with pytest.raises(ConfigError):
            ExperimentConfig(preset="half-step").sweep_values()

    def test_load_yaml(self, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text(
            "signal: [[5, 0.0, -0.05], [15, 0.0, 0.05]]\n"
            "constant: 0.2\n"
            "n: 601\n"
            "order: 2\n"
            "tabs: 6\n"
            "update: false\n"
        )
        config = load_experiment_config(path)
        assert config.signal_rows == ((5.0, 0.0, -0.05), (15.0, 0.0, 0.05))
        assert config.orders == (2,)
        assert config.tabs == 6
        assert not config.update
        assert config.signal().bandwidth == 15

    def test_overrides_win(self, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text("n: 601\nseed: 3\n")
        config = load_experiment_config(path, {"n": 1001, "seed": None})
        assert config.n == 1001
        assert config.seed == 3

    def test_unknown_yaml_key(self, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text("n: 601\nsamples: 3\n")
        with pytest.raises(ConfigError, match="samples"):
            load_experiment_config(path)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text("n: [601\n")
        with pytest.raises(ConfigError):
            load_experiment_config(path)

    def test_non_mapping_yaml(self, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            load_experiment_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_experiment_config(tmp_path / "absent.yaml")

    def test_undersampled_n(self):
        with pytest.raises(ConfigError):
            load_experiment_config(overrides={"n": 30})

    def test_high_order_needs_taps(self):
        with pytest.raises(ConfigError):
            load_experiment_config(overrides={"orders": (4,)})

    def test_bad_value(self):
        with pytest.raises(ConfigError):
            load_experiment_config(overrides={"n": "many"})

    def test_unknown_override(self):
        with pytest.raises(ConfigError):
            ExperimentConfig().with_overrides(colour="red")


# ============================================================================
# REPORTS
# ============================================================================


class TestReports:
    """Rendering and writing"""

    def test_csv_format(self):
        text = render_csv(pd.DataFrame({"n": [0, 1], "y": [0.5, -0.25]}))
        assert text == "n,y\n0,5.000000000000e-01\n1,-2.500000000000e-01\n"

    def test_json_sorted_with_newline(self):
        text = render_json({"b": np.float64(1.5), "a": np.arange(2)})
        assert text.endswith("}\n")
        assert list(json.loads(text)) == ["a", "b"]
        assert json.loads(text)["a"] == [0, 1]

    def test_svg_is_deterministic(self):
        x = np.linspace(0, 1, 50)
        first = render_line_plot(x, {"sin": np.sin(x)}, "t", "x", "y")
        second = render_line_plot(x, {"sin": np.sin(x)}, "t", "x", "y")
        assert first.startswith("<?xml")
        assert first == second

    def test_loglog_plot(self):
        svg = render_line_plot([10, 100], {"rate": [1e-2, 1e-4]}, "t", "N", "err", loglog=True)
        assert "<svg" in svg

    def test_write_bundle(self, tmp_path):
        written = write_bundle(tmp_path / "out", {"a.csv": "x\n1\n"})
        assert (tmp_path / "out" / "a.csv").read_text() == "x\n1\n"
        assert written["a.csv"].endswith("a.csv")

    def test_write_bundle_error_names_path(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(ReportWriteError) as exc:
            write_bundle(blocker / "sub", {"a.csv": ""})
        assert "file" in str(exc.value)

    async def test_write_bundle_async(self, tmp_path):
        written = await write_bundle_async(tmp_path, {"s.json": "{}\n"})
        assert (tmp_path / "s.json").read_text() == "{}\n"
        assert list(written) == ["s.json"]

    def test_spike_ratio(self):
        assert spike_ratio(np.array([10.0, 1.0, 1.0, -1.0])) == pytest.approx(10.0)
        assert spike_ratio(np.zeros(4)) == 0.0
        assert spike_ratio(np.array([1.0, 0.0, 0.0])) == float("inf")


# ============================================================================
# FIGURE 1
# ============================================================================


@pytest.fixture(scope="module")
def small_figure1():
    return run_figure1(ExperimentConfig(n=601))


class TestFigure1:
    """Errors before and after the update"""

    def test_files(self, small_figure1):
        assert set(small_figure1.files) == {
            "figure1_order1.csv",
            "figure1_order2.csv",
            "figure1_panel_a.svg",
            "figure1_panel_b.svg",
            "figure1_panel_c.svg",
            "figure1_summary.json",
        }
        assert small_figure1.exit_code == EXIT_OK

    def test_csv_columns(self, small_figure1):
        frame = pd.read_csv(io.StringIO(small_figure1.files["figure1_order2.csv"]))
        assert list(frame.columns) == FIGURE1_COLUMNS
        assert len(frame) == 6010

    def test_error_columns_consistent(self, small_figure1):
        frame = pd.read_csv(io.StringIO(small_figure1.files["figure1_order1.csv"]))
        np.testing.assert_allclose(frame["f"] - frame["f_r"], frame["f_minus_f_r"], atol=1e-10)

    def test_update_zeroes_remainders(self, small_figure1):
        for summary in small_figure1.summary["orders"].values():
            assert abs(summary["remainder_after"]) < 1e-9
            assert summary["shape_checks"]["mean_near_minus_delta"]

    def test_updated_errors_within_bound(self, small_figure1):
        for summary in small_figure1.summary["orders"].values():
            assert summary["sup_error_after"] <= summary["bound_after"]
            assert summary["sup_error_before"] <= summary["bound_before"]

    def test_summary_json(self, small_figure1):
        data = json.loads(small_figure1.files["figure1_summary.json"])
        assert set(data["orders"]) == {"1", "2"}
        assert data["signal"]["bandwidth"] == 15
        assert "order2_better_after_update" in data

    def test_deterministic(self, small_figure1):
        again = run_figure1(ExperimentConfig(n=601))
        assert again.files == small_figure1.files

    def test_single_order_skips_other_panels(self):
        result = run_figure1(ExperimentConfig(n=301, orders=(1,)))
        assert "figure1_panel_c.svg" not in result.files
        assert "order2_better_after_update" not in result.summary

    def test_zero_signal(self):
        result = run_figure1(ExperimentConfig(preset="zero", n=300, orders=(1,)))
        summary = result.summary["orders"]["1"]
        assert summary["delta"] == 0.0
        assert np.isfinite(summary["sup_error_after"])

    @pytest.mark.slow
    def test_reference_scale(self):
        result = run_figure1(ExperimentConfig())
        orders = result.summary["orders"]
        assert abs(orders["1"]["delta"]) <= 1 / 9002
        assert abs(orders["2"]["delta"]) <= 2 / 9002
        assert result.summary["order2_better_after_update"]
        for summary in orders.values():
            # boundary spike present before the update, gone after it
            assert summary["shape_checks"]["spike_without_update"]
            assert summary["shape_checks"]["no_spike_after_update"]
            assert summary["spike_ratio_before"] > 10.0
            assert summary["spike_ratio_after"] <= 3.0
            assert summary["shape_checks"]["mean_near_minus_delta"]


# ============================================================================
# DECAY SWEEP
# ============================================================================


class TestDecaySweep:
    """Sweeps over N"""

    def test_too_few_points(self):
        with pytest.raises(ConfigError):
            run_decay_sweep(ExperimentConfig(sweep=(301, 601, 1201, 2401, 4801)))

    def test_span_under_one_decade(self):
        with pytest.raises(ConfigError):
            run_decay_sweep(ExperimentConfig(sweep=(301, 351, 401, 451, 501, 551)))

    def test_small_sweep_files(self):
        result = run_decay_sweep(ExperimentConfig(sweep=(31, 61, 101, 151, 211, 401), orders=(1,)), max_workers=2)
        assert set(result.files) == {"sweep.csv", "sweep.svg", "sweep_summary.json"}
        frame = pd.read_csv(io.StringIO(result.files["sweep.csv"]))
        assert list(frame.columns) == ["scheme", "order", "updated", "n_samples", "sup_error", "bound", "stable"]
        assert set(frame["scheme"]) == {"order1-baseline", "order1-updated"}
        assert result.summary["bound_violations"] == 0

    def test_baseline_only(self):
        config = ExperimentConfig(sweep=(31, 61, 101, 151, 211, 401), orders=(1,), update=False)
        result = run_decay_sweep(config, max_workers=1)
        assert list(result.summary["slopes"]) == ["order1-baseline"]

    @pytest.mark.slow
    def test_default_sweep_meets_thresholds(self):
        result = run_decay_sweep(ExperimentConfig())
        assert result.summary["passed"], result.summary["checks"]
        assert result.exit_code == EXIT_OK
        assert result.summary["slopes"]["order2-updated"] < result.summary["slopes"]["order2-baseline"]


# ============================================================================
# TRACES AND IDENTITY SUITE
# ============================================================================


class TestTraces:
    """quantize command output"""

    def test_columns_and_files(self):
        result = dump_traces(ExperimentConfig(n=101, orders=(1, 2)))
        assert set(result.files) == {
            "quantize_order1.csv",
            "quantize_order1_updated.csv",
            "quantize_order2.csv",
            "quantize_order2_updated.csv",
        }
        frame = pd.read_csv(io.StringIO(result.files["quantize_order2.csv"]))
        assert list(frame.columns) == ["n", "y", "q", "v", "u"]
        assert len(frame) == 101
        assert set(frame["q"]) <= {-1.0, 1.0}

    def test_without_update(self):
        result = dump_traces(ExperimentConfig(n=101, orders=(1,), update=False))
        assert list(result.files) == ["quantize_order1.csv"]


class TestVerification:
    """Identity suite"""

    def test_random_bounded_signal(self, rng):
        signal, N = random_bounded_signal(rng, lambda n: 0.5, jitter=False)
        assert N >= 2 * signal.bandwidth + 1
        assert sample(signal, N).max_abs == pytest.approx(0.5)

    def test_random_signal_min_samples(self, rng):
        _, N = random_bounded_signal(rng, lambda n: 0.2, min_samples=50)
        assert N >= 50

    def test_suite_passes(self):
        checks = run_verification(ExperimentConfig(n=1001))
        failed = [c.to_dict() for c in checks if not c.passed]
        assert not failed
        assert [c.name for c in checks] == [
            "interpolation_exactness",
            "first_order_zeroing",
            "second_order_zeroing",
            "remainder_identity",
            "error_bound_validity",
            "constant_signal_lower_bound",
            "first_order_state_bound",
            "parity_identity",
            "recurrence_residual",
        ]

    @pytest.mark.slow
    def test_suite_passes_at_full_scale(self):
        assert verification_result(run_verification(ExperimentConfig())).exit_code == EXIT_OK

    def test_failed_check_sets_exit_code(self):
        checks = [CheckResult("a", CheckStatus.PASS, ""), CheckResult("b", CheckStatus.FAIL, "off")]
        result = verification_result(checks)
        assert result.exit_code == EXIT_ACCEPTANCE_FAILURE
        assert not result.summary["passed"]


class TestHarnessEngine:
    """Async tool responses"""

    async def test_run_figure1(self, tmp_path):
        response = await HarnessEngine(tmp_path).run_figure1(n_samples=301, orders=[1])
        assert response.success
        assert response.metadata["exit_code"] == EXIT_OK
        assert (tmp_path / "figure1_order1.csv").exists()

    async def test_verify(self, tmp_path):
        response = await HarnessEngine(tmp_path).verify(n_samples=601)
        assert response.success
        assert response.data["passed"]

    async def test_sweep_config_error(self, tmp_path):
        response = await HarnessEngine(tmp_path).run_decay_sweep(sweep=[301, 601])
        assert not response.success
        assert response.metadata["error_type"] == "ConfigError"
