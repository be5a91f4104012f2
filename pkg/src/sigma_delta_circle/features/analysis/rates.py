"""
Decay rates of reconstruction error against the sample count
"""

from typing import Sequence

import numpy as np
from scipy.stats import linregress


def decay_slope(ns: Sequence[float], errors: Sequence[float]) -> float:
    """Ordinary least squares slope of log(error) against log(N)"""
    n_values = np.asarray(ns, dtype=float)
    error_values = np.asarray(errors, dtype=float)
    if n_values.size != error_values.size or n_values.size < 2:
        raise ValueError("Need at least two (N, error) pairs of equal length")
    if np.any(error_values <= 0) or np.any(n_values <= 0):
        raise ValueError("Decay slopes need positive N and errors")
    return float(linregress(np.log(n_values), np.log(error_values)).slope)
