"""
One-bit Sigma-Delta quantizer with minimal-support feedback filters
"""

from .filters import (
    FeedbackFilter,
    GFilter,
    SigmaDeltaScheme,
    make_first_order,
    make_second_order,
    make_minimal_support,
    minimal_support_taps,
    make_scheme,
    build_scheme,
    check_stability,
    DEFAULT_THIRD_ORDER_POSITIONS,
)
from .modulator import QuantizationRun, quantize, greedy_sign
from .engine import QuantizerEngine

__all__ = [
    'FeedbackFilter',
    'GFilter',
    'SigmaDeltaScheme',
    'make_first_order',
    'make_second_order',
    'make_minimal_support',
    'minimal_support_taps',
    'make_scheme',
    'build_scheme',
    'check_stability',
    'DEFAULT_THIRD_ORDER_POSITIONS',
    'QuantizationRun',
    'quantize',
    'greedy_sign',
    'QuantizerEngine',
]
