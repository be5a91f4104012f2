"""
Backward and forward finite differences of sequences

Backward differences use a zero-padded history, matching the state
initialization u_{-1} = ... = u_{-m} = 0.
"""

from typing import Sequence, Union

import numpy as np

from ...shared.types import DifferenceDirection


def finite_difference(
    seq: Sequence[float],
    order: int,
    direction: Union[str, DifferenceDirection] = DifferenceDirection.BACKWARD,
) -> np.ndarray:
    """
    order-fold finite difference of a sequence

    Backward: (Delta u)_n = u_n - u_{n-1} with u_{-j} = 0, same length as seq.
    Forward: (bar Delta u)_n = u_{n+1} - u_n, length len(seq) - order.
    Order 0 returns a copy of the sequence.
    """
    values = np.asarray(seq, dtype=float)
    if order < 0:
        raise ValueError(f"Difference order must be >= 0, got {order}")
    if order == 0:
        return values.copy()
    direction = DifferenceDirection(direction)
    if direction == DifferenceDirection.BACKWARD:
        padded = np.concatenate([np.zeros(order), values])
        return np.diff(padded, n=order)
    if values.size <= order:
        return np.zeros(0)
    return np.diff(values, n=order)


def last_backward_difference(seq: Sequence[float], order: int) -> float:
    """Delta^order u_{N-1}, the boundary remainder for order + 1 schemes"""
    values = np.asarray(seq, dtype=float)
    if values.size == 0:
        return 0.0
    return float(finite_difference(values, order)[-1])


def integrate_residual(residual: Sequence[float], order: int) -> np.ndarray:
    """Solve Delta^order u = residual forward from zero history (order-fold cumulative sum)"""
    u = np.asarray(residual, dtype=float)
    for _ in range(order):
        u = np.cumsum(u)
    return u
