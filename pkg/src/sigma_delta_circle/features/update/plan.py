"""
Constant update of the samples that removes the boundary remainder

With r = Delta^{m-1} u_{N-1} = sum(y) - sum(q), re-quantizing
y~_n = y_n + delta with delta = -r/N gives r~ = 2(L - L~). For m = 1 and
m = 2 (under the stability criterion) this even integer lies in (-2, 2)
and so vanishes.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from ...shared.errors import LengthMismatch, StabilityLost
from ...shared.types import IDENTITY_TOLERANCE
from ..analysis.differences import last_backward_difference
from ..bandlimited.signal import SampleGrid
from ..quantizer.filters import SigmaDeltaScheme, check_stability
from ..quantizer.modulator import QuantizationRun, quantize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class UpdatePlan:
    """Baseline run, constant update and the re-quantized run"""
    order: int
    delta: float
    baseline_run: QuantizationRun
    shifted_grid: SampleGrid
    updated_run: QuantizationRun
    bit_flip_count: int
    sub_remainders: List[float] = field(default_factory=list)

    @property
    def baseline_remainder(self) -> float:
        return self.baseline_run.remainder

    @property
    def updated_remainder(self) -> float:
        return self.updated_run.remainder

    @property
    def remainder_even_integer(self) -> int:
        """Nearest even integer to r~"""
        return int(2 * round(self.updated_remainder / 2))

    @property
    def parity_residual(self) -> float:
        """|r~ - 2(L - L~)|"""
        return abs(self.updated_remainder - 2 * self.bit_flip_count)

    @property
    def zeroed(self) -> bool:
        return abs(self.updated_remainder) <= IDENTITY_TOLERANCE

    @property
    def lower_bound_after(self) -> float:
        """(1/N)|sum(y~) - sum(q~)|"""
        grid = self.shifted_grid
        return abs(float(np.sum(grid.samples) - np.sum(self.updated_run.bits))) / grid.n_samples

    def summary(self) -> dict:
        return {
            "order": self.order,
            "delta": self.delta,
            "baseline_remainder": self.baseline_remainder,
            "updated_remainder": self.updated_remainder,
            "bit_flip_count": self.bit_flip_count,
            "remainder_even_integer": self.remainder_even_integer,
            "parity_residual": self.parity_residual,
            "zeroed": self.zeroed,
            "sub_remainders": list(self.sub_remainders),
            "lower_bound_after": self.lower_bound_after,
            "baseline_stable": self.baseline_run.stable,
            "updated_stable": self.updated_run.stable,
        }


def compute_update(run: QuantizationRun, grid: SampleGrid) -> float:
    """delta = -Delta^{m-1} u_{N-1} / N"""
    if run.n_samples != grid.n_samples:
        raise LengthMismatch(f"Run has {run.n_samples} bits but the grid has {grid.n_samples} samples")
    return -run.remainder / grid.n_samples


def apply_update(scheme: SigmaDeltaScheme, grid: SampleGrid) -> UpdatePlan:
    """
    Quantize, shift every sample by the constant update and quantize again

    Raises:
        StabilityLost: if a second order scheme's shifted samples violate ||h||_1 + ||y~||_inf <= 2
    """
    N = grid.n_samples
    baseline = quantize(scheme, grid)
    delta = compute_update(baseline, grid)
    shifted = grid.shifted(delta)
    m = scheme.order

    if m == 2 and not check_stability(scheme, shifted):
        raise StabilityLost(
            f"Shifted samples ||y~||_inf={shifted.max_abs:.6g} exceed mu={scheme.stability_margin:.6g} "
            f"(delta={delta:.6g})"
        )
    if m == 1 and baseline.stable:
        assert shifted.max_abs <= 1 + 1 / N + IDENTITY_TOLERANCE, "first order update left [-1-1/N, 1+1/N]"

    updated = quantize(scheme, shifted)
    plan = UpdatePlan(
        order=m,
        delta=delta,
        baseline_run=baseline,
        shifted_grid=shifted,
        updated_run=updated,
        bit_flip_count=baseline.plus_count - updated.plus_count,
        sub_remainders=[last_backward_difference(updated.u, j) for j in range(m - 1)] if m >= 3 else [],
    )

    if plan.parity_residual > IDENTITY_TOLERANCE:
        logger.warning(
            f"Parity identity off by {plan.parity_residual:.3e}: r~={plan.updated_remainder:.12g}, "
            f"2(L-L~)={2 * plan.bit_flip_count}"
        )
    if m in (1, 2) and baseline.stable and not plan.zeroed:
        logger.warning(f"Order {m} update left remainder {plan.updated_remainder:.6g}")
    logger.info(
        f"Order {m} update N={N}: delta={delta:.6e}, remainder {baseline.remainder:.6g} -> "
        f"{plan.updated_remainder:.3g}, L-L~={plan.bit_flip_count}"
    )
    return plan
