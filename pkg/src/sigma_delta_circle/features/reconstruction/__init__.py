"""
Reconstruction from samples or bits and reconstruction error reports
"""

from .reconstruct import Reconstruction, reconstruct
from .error import ErrorReport, measure_error, error_report
from .engine import ReconstructionEngine

__all__ = [
    'Reconstruction',
    'reconstruct',
    'ErrorReport',
    'measure_error',
    'error_report',
    'ReconstructionEngine',
]
