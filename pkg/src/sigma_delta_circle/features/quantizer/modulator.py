"""
Greedy one-bit Sigma-Delta recurrence

    v_n = (h * v)_n + y_n - q_n
    q_n = sign((h * v)_n + y_n),   sign(x) = 1 for x > 0, -1 for x <= 0
"""

import logging
from dataclasses import dataclass

import numpy as np

from ...shared.errors import EmptyGrid
from ...shared.types import IDENTITY_TOLERANCE
from ..analysis.differences import finite_difference, last_backward_difference
from ..bandlimited.signal import SampleGrid
from .filters import SigmaDeltaScheme, check_stability

logger = logging.getLogger(__name__)


def greedy_sign(x: float) -> float:
    """sign with the tie rule sign(0) = -1"""
    return 1.0 if x > 0 else -1.0


@dataclass(frozen=True, eq=False)
class QuantizationRun:
    """Bits and state traces of one pass of the recurrence over a sample grid"""
    order: int
    samples: np.ndarray
    bits: np.ndarray
    v: np.ndarray
    u: np.ndarray
    plus_count: int
    remainder: float
    remainder_from_sums: float
    stable: bool

    @property
    def n_samples(self) -> int:
        return int(self.bits.size)

    @property
    def state_sup(self) -> float:
        """||u||_inf"""
        return float(np.max(np.abs(self.u)))

    @property
    def remainder_drift(self) -> float:
        return abs(self.remainder - self.remainder_from_sums)

    def boundary_differences(self) -> np.ndarray:
        """Delta^j u_{N-1} for j = 0..m-1"""
        return np.array([last_backward_difference(self.u, j) for j in range(self.order)])

    def recurrence_residual(self) -> float:
        """max_n |Delta^m u_n - (y_n - q_n)|"""
        return float(np.max(np.abs(finite_difference(self.u, self.order) - (self.samples - self.bits))))


def quantize(scheme: SigmaDeltaScheme, grid: SampleGrid) -> QuantizationRun:
    """
    Run the greedy recurrence over all samples

    The v history v_{-1} = ... = v_{-k} is zero, hence u_{-1} = ... = u_{-m} = 0.

    Raises:
        EmptyGrid: if the grid has no samples
    """
    N = grid.n_samples
    if N == 0:
        raise EmptyGrid("Cannot quantize an empty sample grid")

    stable = check_stability(scheme, grid)
    if not stable:
        logger.warning(
            f"Stability criterion violated: ||y||_inf={grid.max_abs:.6g} exceeds mu={scheme.stability_margin:.6g}; "
            f"proceeding with order {scheme.order} run flagged unstable"
        )

    taps = scheme.filter.taps
    k = scheme.filter.tab_count
    active = [(j, float(taps[j])) for j in range(1, k + 1) if taps[j] != 0.0]
    y = grid.samples.tolist()

    history = [0.0] * (N + k)
    bits = [0.0] * N
    for n in range(N):
        idx = n + k
        feedback = 0.0
        for j, h_j in active:
            feedback += h_j * history[idx - j]
        pre = feedback + y[n]
        q = greedy_sign(pre)
        bits[n] = q
        history[idx] = pre - q

    v = np.array(history[k:])
    q_array = np.array(bits)
    u = np.convolve(v, scheme.g.taps)[:N]

    remainder = last_backward_difference(u, scheme.order - 1)
    from_sums = float(np.sum(grid.samples) - np.sum(q_array))
    if abs(remainder - from_sums) > IDENTITY_TOLERANCE:
        logger.warning(
            f"Remainder drift: Delta^{scheme.order - 1} u_(N-1)={remainder:.12g} "
            f"but sum(y)-sum(q)={from_sums:.12g}"
        )

    run = QuantizationRun(
        order=scheme.order,
        samples=grid.samples,
        bits=q_array,
        v=v,
        u=u,
        plus_count=int(np.count_nonzero(q_array > 0)),
        remainder=remainder,
        remainder_from_sums=from_sums,
        stable=stable,
    )
    logger.debug(f"Quantized N={N} order={scheme.order}: L={run.plus_count} remainder={remainder:.6g}")
    return run
