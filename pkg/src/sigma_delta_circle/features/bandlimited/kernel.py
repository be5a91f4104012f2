"""
Dirichlet reproducing kernel of K-bandlimited functions and its derivatives
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
from scipy.integrate import simpson
from scipy.optimize import minimize_scalar

from ...shared.types import REMOVABLE_SINGULARITY_THRESHOLD

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

_CHUNK = 65536
_NORM_POINTS_PER_FREQUENCY = 50
_NORM_RELATIVE_CHANGE = 1e-6
_NORM_MAX_REFINEMENTS = 9


@dataclass(frozen=True)
class DirichletKernel:
    """phi^K(x) = sin((2K+1)x/2) / sin(x/2) = sum_{|k|<=K} e^{ikx}"""
    bandwidth: int

    def __post_init__(self):
        if self.bandwidth < 0:
            raise ValueError(f"Bandwidth must be nonnegative, got {self.bandwidth}")

    @property
    def peak(self) -> int:
        return 2 * self.bandwidth + 1

    def fourier_sum(self, x: ArrayLike) -> ArrayLike:
        """Term-by-term form 1 + 2 sum_{k=1}^K cos(kx)"""
        return _derivative_values(self.bandwidth, 0, x)

    def value(self, x: ArrayLike) -> ArrayLike:
        return kernel_value(self, x)

    def derivative(self, order: int, x: ArrayLike) -> ArrayLike:
        return kernel_derivative(self, order, x)

    def reproducing_sum(self, N: int, k: int) -> float:
        """(1/N) sum_n phi^K(2*pi*k/N - 2*pi*n/N); equals 1 whenever N >= 2K+1"""
        n = np.arange(N)
        return float(np.mean(kernel_value(self, 2 * np.pi * (k - n) / N)))


def _derivative_values(bandwidth: int, order: int, x: ArrayLike) -> ArrayLike:
    """
    order-th derivative of 1 + 2 sum cos(kx), differentiated term by term

    d^p/dx^p cos(kx) cycles through cos, -sin, -cos, sin with factor k^p.
    """
    angles = np.asarray(x, dtype=float)
    flat = np.atleast_1d(angles).ravel()
    k = np.arange(1, bandwidth + 1, dtype=float)
    weights = 2.0 * k ** order
    phase = order % 4
    result = np.empty(flat.shape, dtype=float)
    for start in range(0, flat.size, _CHUNK):
        block = np.multiply.outer(flat[start:start + _CHUNK], k)
        if phase == 0:
            terms = np.cos(block)
        elif phase == 1:
            terms = -np.sin(block)
        elif phase == 2:
            terms = -np.cos(block)
        else:
            terms = np.sin(block)
        result[start:start + _CHUNK] = terms @ weights
    if order == 0:
        result += 1.0
    if angles.ndim == 0:
        return float(result[0])
    return result.reshape(angles.shape)


def kernel_value(kernel: DirichletKernel, x: ArrayLike) -> ArrayLike:
    """
    Dirichlet kernel value

    Uses the sine ratio away from multiples of 2*pi and the finite Fourier
    sum where |sin(x/2)| falls below the removable-singularity threshold.
    """
    angles = np.asarray(x, dtype=float)
    flat = np.atleast_1d(angles).ravel()
    half = np.sin(flat / 2)
    near_pole = np.abs(half) < REMOVABLE_SINGULARITY_THRESHOLD
    result = np.empty(flat.shape, dtype=float)
    regular = ~near_pole
    result[regular] = np.sin(kernel.peak * flat[regular] / 2) / half[regular]
    if np.any(near_pole):
        result[near_pole] = _derivative_values(kernel.bandwidth, 0, flat[near_pole])
    if angles.ndim == 0:
        return float(result[0])
    return result.reshape(angles.shape)


def kernel_derivative(kernel: DirichletKernel, order: int, x: ArrayLike) -> ArrayLike:
    """order-th derivative of phi^K at x (order >= 1), exact term-by-term form"""
    if order < 1:
        raise ValueError(f"Derivative order must be >= 1, got {order}")
    return _derivative_values(kernel.bandwidth, order, x)


def _polished_sup(bandwidth: int, order: int, grid: np.ndarray, values: np.ndarray) -> float:
    """Grid maximum of |phi^(order)| refined by a bounded scalar search around it"""
    index = int(np.argmax(values))
    best = float(values[index])
    step = grid[1] - grid[0]
    centre = grid[index]
    result = minimize_scalar(
        lambda s: -abs(_derivative_values(bandwidth, order, s)),
        bounds=(centre - step, centre + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if result.success:
        best = max(best, float(-result.fun))
    return best


@lru_cache(maxsize=64)
def _kernel_norms(bandwidth: int, order: int, base_intervals: int) -> Tuple[float, float]:
    intervals = base_intervals
    grid = np.linspace(0.0, 2 * np.pi, intervals + 1)
    values = np.abs(_derivative_values(bandwidth, order, grid))
    l1 = float(simpson(values, x=grid))
    for _ in range(_NORM_MAX_REFINEMENTS):
        intervals *= 2
        grid = np.linspace(0.0, 2 * np.pi, intervals + 1)
        values = np.abs(_derivative_values(bandwidth, order, grid))
        refined = float(simpson(values, x=grid))
        change = abs(refined - l1) / max(abs(refined), np.finfo(float).tiny)
        l1 = refined
        if change < _NORM_RELATIVE_CHANGE:
            break
    else:
        logger.warning(
            f"L1 norm of phi^({order}) for K={bandwidth} did not reach relative change "
            f"{_NORM_RELATIVE_CHANGE} after {_NORM_MAX_REFINEMENTS} refinements"
        )
    sup = _polished_sup(bandwidth, order, grid, values)
    logger.debug(f"Kernel norms K={bandwidth} order={order}: L1={l1:.6e} sup={sup:.6e} ({intervals} intervals)")
    return l1, sup


def kernel_norms(
    kernel: DirichletKernel,
    derivative_order: int,
    base_intervals: Optional[int] = None,
) -> Tuple[float, float]:
    """
    L1 norm over [0, 2*pi) and sup norm of the derivative_order-th derivative

    Composite Simpson quadrature on a uniform grid starting at 50(2K+1)+1
    points, doubled until the L1 value changes by less than 1e-6 relative.

    Returns:
        (l1_norm, sup_norm)
    """
    if derivative_order < 0:
        raise ValueError(f"Derivative order must be >= 0, got {derivative_order}")
    if base_intervals is None:
        base_intervals = _NORM_POINTS_PER_FREQUENCY * kernel.peak
    if base_intervals % 2:
        base_intervals += 1
    return _kernel_norms(kernel.bandwidth, derivative_order, base_intervals)
