"""
Feedback filters h, derived g filters and Sigma-Delta schemes

A scheme of order m uses taps h with h_0 = 0 and a finitely supported g
such that Delta^m g = delta^0 - h; then u = g * v satisfies
Delta^m u = y - q.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.special import perm

from ...shared.errors import InvalidFilterError, InvalidTabCount
from ..analysis.differences import finite_difference
from ..bandlimited.signal import SampleGrid

logger = logging.getLogger(__name__)

_SUPPORT_TOLERANCE = 1e-12

DEFAULT_THIRD_ORDER_POSITIONS = (1, 10, 30)


def _frozen(values: Sequence[float]) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FeedbackFilter:
    """Strictly causal taps h_0..h_k of an order m scheme"""
    order: int
    taps: np.ndarray

    def __post_init__(self):
        taps = _frozen(self.taps)
        if self.order < 1:
            raise InvalidFilterError(f"Order must be >= 1, got {self.order}")
        if taps.size < 2:
            raise InvalidFilterError("A feedback filter needs at least taps (h_0, h_1)")
        if taps[0] != 0:
            raise InvalidFilterError(f"h_0 must be 0 for a causal recurrence, got {taps[0]}")
        if abs(taps.sum() - 1.0) > _SUPPORT_TOLERANCE * max(1.0, np.abs(taps).sum()):
            raise InvalidFilterError(f"Taps must sum to 1, got {taps.sum():.15g}")
        object.__setattr__(self, "taps", taps)

    @property
    def tab_count(self) -> int:
        return int(self.taps.size - 1)

    @property
    def l1_norm(self) -> float:
        return float(np.abs(self.taps).sum())


@dataclass(frozen=True, eq=False)
class GFilter:
    """Finitely supported g with Delta^m g = delta^0 - h"""
    taps: np.ndarray

    @classmethod
    def derive(cls, feedback: FeedbackFilter) -> "GFilter":
        """
        m-fold cumulative summation of delta^0 - h

        Raises:
            InvalidFilterError: if any partial sum sequence has a nonzero tail,
                i.e. g would not be finitely supported
        """
        stage = -np.array(feedback.taps)
        stage[0] += 1.0
        scale = max(1.0, float(np.abs(stage).sum()))
        for level in range(1, feedback.order + 1):
            stage = np.cumsum(stage)
            if abs(stage[-1]) > _SUPPORT_TOLERANCE * scale:
                raise InvalidFilterError(
                    f"delta^0 - h has no zero of order {feedback.order} at z=1: "
                    f"tail {stage[-1]:.3e} after {level} summation(s); g is not finitely supported"
                )
            stage[-1] = 0.0
        support = np.flatnonzero(np.abs(stage) > _SUPPORT_TOLERANCE * scale)
        length = int(support[-1]) + 1 if support.size else 1
        return cls(taps=_frozen(stage[:length]))

    def differences(self, order: int, length: int) -> np.ndarray:
        """Delta^order g over indices 0..length-1"""
        padded = np.zeros(max(length, self.taps.size))
        padded[:self.taps.size] = self.taps
        return finite_difference(padded, order)[:length]

    def satisfies(self, feedback: FeedbackFilter, tolerance: float = 1e-12) -> bool:
        """Check Delta^m g = delta^0 - h as sequences"""
        length = max(feedback.taps.size, self.taps.size + feedback.order)
        target = np.zeros(length)
        target[0] = 1.0
        target[:feedback.taps.size] -= feedback.taps
        return bool(np.max(np.abs(self.differences(feedback.order, length) - target)) <= tolerance)


@dataclass(frozen=True, eq=False)
class SigmaDeltaScheme:
    """Feedback filter, derived g filter and stability margin mu = 2 - ||h||_1"""
    filter: FeedbackFilter
    g: GFilter

    @property
    def order(self) -> int:
        return self.filter.order

    @property
    def stability_margin(self) -> float:
        return 2.0 - self.filter.l1_norm

    def describe(self) -> dict:
        return {
            "order": self.order,
            "taps": self.filter.taps.tolist(),
            "g": self.g.taps.tolist(),
            "stability_margin": self.stability_margin,
        }


def make_scheme(taps: Sequence[float], order: int) -> SigmaDeltaScheme:
    """Scheme from user-supplied taps, validating the filter invariants"""
    feedback = FeedbackFilter(order=order, taps=taps)
    g = GFilter.derive(feedback)
    if not g.satisfies(feedback):
        raise InvalidFilterError("Derived g does not satisfy Delta^m g = delta^0 - h")
    logger.debug(f"Built order {order} scheme with {feedback.tab_count} tabs, mu={2 - feedback.l1_norm:.6g}")
    return SigmaDeltaScheme(filter=feedback, g=g)


def make_first_order() -> SigmaDeltaScheme:
    """h = (0, 1), g = delta^0, mu = 1"""
    return make_scheme([0.0, 1.0], order=1)


def make_second_order(k: int) -> SigmaDeltaScheme:
    """
    Second order scheme h = (0, h_1, 0, ..., 0, h_k) with h_1 = k/(k-1), h_k = 1 - h_1

    Raises:
        InvalidTabCount: if k < 2
    """
    if k < 2:
        raise InvalidTabCount(f"Second order filters need k >= 2 tabs, got {k}")
    taps = np.zeros(k + 1)
    taps[1] = k / (k - 1)
    taps[k] = 1 - taps[1]
    return make_scheme(taps, order=2)


def minimal_support_taps(positions: Sequence[int]) -> np.ndarray:
    """
    Taps supported on the given positions so that 1 - sum h_j z^j has a zero of order m = len(positions) at z = 1

    Solves sum_j h_j = 1 and sum_j j(j-1)...(j-p+1) h_j = 0 for p = 1..m-1.
    """
    positions = sorted(int(p) for p in positions)
    if not positions or positions[0] < 1 or len(set(positions)) != len(positions):
        raise InvalidFilterError(f"Positions must be distinct positive integers, got {positions}")
    m = len(positions)
    moments = np.array([[perm(j, p, exact=False) for j in positions] for p in range(m)], dtype=float)
    rhs = np.zeros(m)
    rhs[0] = 1.0
    coefficients = np.linalg.solve(moments, rhs)
    taps = np.zeros(positions[-1] + 1)
    taps[positions] = coefficients
    return taps


def make_minimal_support(positions: Sequence[int]) -> SigmaDeltaScheme:
    """Scheme of order len(positions) with taps on the given positions"""
    return make_scheme(minimal_support_taps(positions), order=len(positions))


def check_stability(scheme: SigmaDeltaScheme, grid: SampleGrid) -> bool:
    """||h||_1 + ||y||_inf <= 2, i.e. max |y_n| <= mu"""
    return grid.max_abs <= scheme.stability_margin


def build_scheme(order: int, tabs: int = 4, taps: Optional[Sequence[float]] = None) -> SigmaDeltaScheme:
    """
    Scheme from an (order, tabs, taps) specification

    Explicit taps win. Otherwise order 1 is h = (0, 1), order 2 uses the
    k-tab filter of minimal support, and order 3 uses the default
    minimal-support positions. Higher orders need explicit taps.
    """
    if taps is not None:
        return make_scheme(taps, order)
    if order == 1:
        return make_first_order()
    if order == 2:
        return make_second_order(tabs)
    if order == 3:
        return make_minimal_support(DEFAULT_THIRD_ORDER_POSITIONS)
    raise InvalidFilterError(f"Order {order} schemes need explicit taps")
