"""
Tests for Dirichlet-kernel reconstruction and reconstruction error
"""

import numpy as np
import pytest

from sigma_delta_circle.features.bandlimited import DirichletKernel, TorusSignal, evaluate, preset_signal, sample
from sigma_delta_circle.features.quantizer import build_scheme, make_first_order, make_second_order, quantize
from sigma_delta_circle.features.reconstruction import (
    Reconstruction,
    ReconstructionEngine,
    error_report,
    measure_error,
    reconstruct,
)
from sigma_delta_circle.shared.errors import LengthMismatch

# ============================================================================
# RECONSTRUCTION
# ============================================================================


class TestReconstruct:
    """f_r(t) = (1/N) sum a_n phi(t - t_n)"""

    def test_exact_samples_reproduce_signal(self, signal, kernel, rng):
        N = 301
        grid = sample(signal, N)
        t = rng.uniform(0, 2 * np.pi, 100)
        np.testing.assert_allclose(reconstruct(grid.samples, N, kernel, t), evaluate(signal, t), atol=1e-9)

    def test_random_signals_reproduced(self, rng):
        for _ in range(20):
            K = int(rng.integers(1, 21))
            N = int(rng.integers(2 * K + 1, 6 * K + 1))
            signal = TorusSignal.random(K, rng)
            report = measure_error(signal, sample(signal, N).samples, N)
            assert report.grid_points.size == 10 * N
            assert report.sup_error < 1e-8

    def test_linear_in_coefficients(self, kernel, rng):
        N = 101
        a, b = rng.uniform(-1, 1, N), rng.uniform(-1, 1, N)
        t = rng.uniform(0, 2 * np.pi, 200)
        combined = reconstruct(a, N, kernel, t) + reconstruct(b, N, kernel, t)
        np.testing.assert_allclose(reconstruct(a + b, N, kernel, t), combined, rtol=0, atol=1e-12)

    def test_zero_coefficients(self, kernel):
        assert reconstruct(np.zeros(40), 40, kernel, 1.3) == 0.0

    def test_ones_reconstruct_constant(self, kernel):
        t = np.linspace(0, 2 * np.pi, 25)
        np.testing.assert_allclose(reconstruct(np.ones(64), 64, kernel, t), 1.0, atol=1e-12)

    def test_scalar_input_returns_float(self, kernel):
        assert isinstance(reconstruct(np.ones(40), 40, kernel, 0.2), float)

    def test_length_mismatch(self, kernel):
        with pytest.raises(LengthMismatch):
            reconstruct(np.ones(10), 11, kernel, 0.0)

    def test_fft_evaluation_matches_direct_sum(self, small_grid, kernel):
        run = quantize(make_second_order(4), small_grid)
        recon = Reconstruction(small_grid.n_samples, run.bits, kernel)
        points = 2 * small_grid.n_samples
        direct = recon.value(2 * np.pi * np.arange(points) / points)
        np.testing.assert_allclose(recon.on_uniform_grid(points), direct, atol=1e-9)

    def test_coefficients_are_frozen(self, kernel):
        recon = Reconstruction(3, np.array([1.0, -1.0, 1.0]), kernel)
        with pytest.raises(ValueError):
            recon.coefficients[0] = 0.0


# ============================================================================
# ERROR
# ============================================================================


class TestMeasureError:
    """Errors on the evaluation grid"""

    def test_exact_samples_have_no_error(self, signal):
        grid = sample(signal, 301)
        assert measure_error(signal, grid.samples, 301).sup_error < 1e-9

    def test_default_grid_is_ten_n(self, signal):
        grid = sample(signal, 101)
        report = measure_error(signal, grid.samples, 101)
        assert report.grid_points.size == 1010

    def test_grid_factor_from_environment(self, signal, monkeypatch):
        monkeypatch.setenv("SIGMA_DELTA_GRID_FACTOR", "3")
        report = measure_error(signal, sample(signal, 101).samples, 101)
        assert report.grid_points.size == 303

    def test_coarse_grid_rejected(self, signal):
        with pytest.raises(ValueError):
            measure_error(signal, np.zeros(101), 101, grid_resolution=50)

    def test_length_mismatch(self, signal):
        with pytest.raises(LengthMismatch):
            measure_error(signal, np.zeros(5), 6)

    def test_constant_offset(self):
        signal = TorusSignal.constant(0.25)
        report = measure_error(signal, np.zeros(20), 20)
        assert report.sup_error == pytest.approx(0.25)
        assert report.signed_mean == pytest.approx(0.25)
        assert report.sample_average == pytest.approx(0.25)

    def test_summary_keys(self, signal):
        summary = measure_error(signal, sample(signal, 101).samples, 101).summary()
        assert summary["grid_resolution"] == 1010
        assert summary["theoretical_bound"] is None


class TestErrorReport:
    """Errors of quantized reconstructions"""

    def test_first_order_within_bound(self, reference_grid, signal):
        run = quantize(make_first_order(), reference_grid)
        report = error_report(signal, run)
        assert report.theoretical_bound is not None
        assert report.within_bound

    def test_second_order_within_bound(self, small_grid, signal):
        report = error_report(signal, quantize(make_second_order(4), small_grid))
        assert report.within_bound
        assert report.bound.order == 2

    @pytest.mark.parametrize("N", [10, 11, 100, 101])
    def test_constant_signal_lower_bound(self, N):
        signal = preset_signal("half-step", N)
        run = quantize(make_first_order(), sample(signal, N))
        report = measure_error(signal, run.bits, N)
        assert report.sup_error >= 1 / (2 * N) - 1e-12

    @pytest.mark.parametrize("order", [1, 2, 3])
    @pytest.mark.parametrize("scale", [0.2, 0.9, 1.5])
    def test_sample_average_bounds_sup_error(self, rng, order, scale):
        # (1/N)|sum y - sum q| <= sup |f - f_r|, unstable runs included
        K = int(rng.integers(1, 16))
        N = int(rng.integers(max(2 * K + 1, 40), 40 * K + 41))
        signal = TorusSignal.random(K, rng)
        signal = signal.scaled(scale / sample(signal, N).max_abs)
        grid = sample(signal, N)
        run = quantize(build_scheme(order), grid)
        average = abs(grid.samples.sum() - run.bits.sum()) / N
        for resolution in (N, None):
            report = measure_error(signal, run.bits, N, grid_resolution=resolution)
            assert abs(report.sample_average) == pytest.approx(average, abs=1e-12)
            assert average <= report.sup_error + 1e-12

    def test_kernel_bandwidth_follows_signal(self, small_grid, signal):
        run = quantize(make_first_order(), small_grid)
        explicit = error_report(signal, run, kernel=DirichletKernel(15))
        assert explicit.sup_error == pytest.approx(error_report(signal, run).sup_error)


class TestReconstructionEngine:
    """Tool responses"""

    def test_reconstruction_error_tool(self):
        response = ReconstructionEngine().reconstruction_error(601, order=2)
        assert response.success
        assert response.data["within_bound"]
        assert response.data["stable"]
        assert response.data["grid_resolution"] == 6010

    def test_rows_signal(self):
        response = ReconstructionEngine().reconstruction_error(101, order=1, rows=[[3, 0.2, 0.0]])
        assert response.success
        assert response.data["sup_error"] > 0

    def test_undersampled(self):
        response = ReconstructionEngine().reconstruction_error(20, order=1, preset="paper-fig1")
        assert not response.success
        assert response.metadata["error_type"] == "UndersampledError"
