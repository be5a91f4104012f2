"""
Pointwise and sup-norm reconstruction error on a uniform evaluation grid
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

from ...shared.errors import LengthMismatch
from ..analysis.bounds import ErrorBound, prop2_bound
from ..bandlimited.kernel import DirichletKernel
from ..bandlimited.signal import TorusSignal
from .reconstruct import Reconstruction

if TYPE_CHECKING:
    from ..quantizer.modulator import QuantizationRun

logger = logging.getLogger(__name__)


def default_grid_factor() -> int:
    return int(os.environ.get("SIGMA_DELTA_GRID_FACTOR", 10))


@dataclass(frozen=True, eq=False)
class ErrorReport:
    """Error f(t_j) - f_r(t_j) on a uniform grid"""
    grid_points: np.ndarray
    signed_error: np.ndarray
    pointwise_error: np.ndarray
    sup_error: float
    mean_error: float
    signed_mean: float
    sample_average: float
    theoretical_bound: Optional[float] = None
    bound: Optional[ErrorBound] = None

    @property
    def within_bound(self) -> Optional[bool]:
        if self.theoretical_bound is None:
            return None
        return self.sup_error <= self.theoretical_bound

    def summary(self) -> dict:
        return {
            "grid_resolution": int(self.grid_points.size),
            "sup_error": self.sup_error,
            "mean_error": self.mean_error,
            "signed_mean": self.signed_mean,
            "sample_average": self.sample_average,
            "theoretical_bound": self.theoretical_bound,
        }


def measure_error(
    signal: TorusSignal,
    coefficients: Sequence[float],
    N: int,
    grid_resolution: Optional[int] = None,
    kernel: Optional[DirichletKernel] = None,
) -> ErrorReport:
    """
    Error between a signal and the reconstruction from any coefficient sequence

    Both sides are K-bandlimited, so they are evaluated exactly on the grid
    with inverse FFTs.
    """
    coefficients = np.asarray(coefficients, dtype=float)
    if coefficients.size != N:
        raise LengthMismatch(f"Expected {N} coefficients, got {coefficients.size}")
    M = grid_resolution or default_grid_factor() * N
    if M < N:
        raise ValueError(f"Grid resolution {M} must be at least N={N}")
    kernel = kernel or DirichletKernel(signal.bandwidth)

    reconstruction = Reconstruction(N, coefficients, kernel)
    difference = signal - reconstruction.to_signal()
    signed = difference.on_uniform_grid(M)
    pointwise = np.abs(signed)
    on_samples = difference.on_uniform_grid(N)
    return ErrorReport(
        grid_points=2 * np.pi * np.arange(M) / M,
        signed_error=signed,
        pointwise_error=pointwise,
        sup_error=float(np.max(pointwise)),
        mean_error=float(np.mean(pointwise)),
        signed_mean=float(np.mean(signed)),
        sample_average=float(np.mean(on_samples)),
    )


def error_report(
    signal: TorusSignal,
    run: "QuantizationRun",
    grid_resolution: Optional[int] = None,
    kernel: Optional[DirichletKernel] = None,
) -> ErrorReport:
    """
    Error of the reconstruction from a run's bits, with the error bound attached for orders 1 and 2
    """
    kernel = kernel or DirichletKernel(signal.bandwidth)
    N = run.n_samples
    report = measure_error(signal, run.bits, N, grid_resolution, kernel)
    if run.order not in (1, 2):
        return report
    bound = prop2_bound(run, kernel, N)
    if run.stable and report.sup_error > bound.bound_value:
        logger.warning(f"Measured sup error {report.sup_error:.6e} exceeds bound {bound.bound_value:.6e}")
    return replace(report, theoretical_bound=bound.bound_value, bound=bound)
