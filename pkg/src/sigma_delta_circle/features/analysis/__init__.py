"""
Finite differences, error bounds and numerical checks of the error analysis
"""

from .differences import finite_difference, last_backward_difference, integrate_residual
from .bounds import ErrorBound, prop2_bound
from .identities import (
    DifferenceReport,
    difference_report,
    lemma2_containment,
    summation_by_parts,
    boundary_kernel_differences,
)
from .rates import decay_slope

# AnalysisEngine lives in .engine; it imports the quantizer, which imports this package

__all__ = [
    'finite_difference',
    'last_backward_difference',
    'integrate_residual',
    'ErrorBound',
    'prop2_bound',
    'DifferenceReport',
    'difference_report',
    'lemma2_containment',
    'summation_by_parts',
    'boundary_kernel_differences',
    'decay_slope',
]
