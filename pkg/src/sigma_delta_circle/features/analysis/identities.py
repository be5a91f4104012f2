"""
Numerical checks of the summation-by-parts identity and the finite-difference mean value property
"""

import math
from dataclasses import dataclass
from typing import Protocol, Sequence, Tuple

import numpy as np
from scipy.special import comb

from .differences import finite_difference

_INTERVAL_SAMPLES = 2001
_CONTAINMENT_TOLERANCE = 1e-6


class KernelLike(Protocol):
    def value(self, x): ...

    def derivative(self, order: int, x): ...


def kernel_sequence(kernel: KernelLike, N: int, t: float, count: int) -> np.ndarray:
    """phi_n = phi(t - 2*pi*n/N) for n = 0..count-1"""
    return np.asarray(kernel.value(t - 2 * np.pi * np.arange(count) / N), dtype=float)


@dataclass(frozen=True)
class DifferenceReport:
    """k-th backward difference of phi(t - 2*pi*n/N) at index k and its derivative form"""
    order: int
    difference: float
    scaled_derivative: float
    stencil_interval: Tuple[float, float]
    narrow_interval: Tuple[float, float]
    stencil_range: Tuple[float, float]
    narrow_range: Tuple[float, float]
    in_stencil: bool
    in_narrow: bool


def _derivative_range(kernel: KernelLike, order: int, lo: float, hi: float) -> Tuple[float, float]:
    values = np.asarray(kernel.derivative(order, np.linspace(lo, hi, _INTERVAL_SAMPLES)), dtype=float)
    return float(np.min(values)), float(np.max(values))


def _inside(value: float, bounds: Tuple[float, float]) -> bool:
    tolerance = _CONTAINMENT_TOLERANCE * max(1.0, abs(bounds[0]), abs(bounds[1]))
    return bounds[0] - tolerance <= value <= bounds[1] + tolerance


def difference_report(kernel: KernelLike, k: int, t: float, N: int) -> DifferenceReport:
    """
    Delta^k phi_k = (-1)^k (2pi/N)^k d and where d falls

    d is compared with the range of phi^(k) over the stencil interval
    (t - 2*pi*k/N, t) and over the narrower (t - 2*pi/N, t).
    """
    if k < 1:
        raise ValueError(f"Difference order must be >= 1, got {k}")
    step = 2 * math.pi / N
    phi = kernel_sequence(kernel, N, t, k + 1)
    difference = float(sum((-1) ** j * comb(k, j, exact=True) * phi[k - j] for j in range(k + 1)))
    scaled = difference / ((-1) ** k * step ** k)

    stencil = (t - k * step, t)
    narrow = (t - step, t)
    stencil_range = _derivative_range(kernel, k, *stencil)
    narrow_range = _derivative_range(kernel, k, *narrow)
    return DifferenceReport(
        order=k,
        difference=difference,
        scaled_derivative=scaled,
        stencil_interval=stencil,
        narrow_interval=narrow,
        stencil_range=stencil_range,
        narrow_range=narrow_range,
        in_stencil=_inside(scaled, stencil_range),
        in_narrow=_inside(scaled, narrow_range),
    )


def lemma2_containment(kernel: KernelLike, k: int, t: float, N: int) -> bool:
    """Whether the scaled k-th difference lies in the range of phi^(k) over the stencil interval"""
    return difference_report(kernel, k, t, N).in_stencil


def summation_by_parts(u: Sequence[float], order: int, kernel: KernelLike, N: int, t: float) -> Tuple[float, float]:
    """
    Both sides of the summation-by-parts identity with zero history u_{-j} = 0

        sum_n Delta^m u_n phi_n
          = (-1)^m sum_n u_n Delta^m phi_{n+m}
            + sum_{k=1}^m (-1)^{k+1} Delta^{m-k} u_{N-1} Delta^{k-1} phi_{N+k-1}

    Returns:
        (left, right)
    """
    values = np.asarray(u, dtype=float)
    if values.size != N:
        raise ValueError(f"Expected {N} state values, got {values.size}")
    m = order
    phi = kernel_sequence(kernel, N, t, N + m)
    left = float(np.dot(finite_difference(values, m), phi[:N]))

    right = (-1) ** m * float(np.dot(values, finite_difference(phi, m, "forward")[:N]))
    for k in range(1, m + 1):
        u_term = float(finite_difference(values, m - k)[-1])
        phi_term = float(finite_difference(phi[N:N + k], k - 1, "forward")[0])
        right += (-1) ** (k + 1) * u_term * phi_term
    return left, right


def boundary_kernel_differences(kernel: KernelLike, N: int, t: float, k: int) -> Tuple[float, float]:
    """(Delta^{k-1} phi_{N+k-1}, Delta^{k-1} phi_{k-1}); equal by 2*pi periodicity"""
    phi = kernel_sequence(kernel, N, t, N + k)
    at_end = float(finite_difference(phi[N:N + k], k - 1, "forward")[0])
    at_start = float(finite_difference(phi[:k], k - 1, "forward")[0])
    return at_end, at_start
