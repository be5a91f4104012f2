"""
Bandlimited functions on the circle and the Dirichlet kernel
"""

from .signal import TorusSignal, SampleGrid, evaluate, sample, reference_signal, imaginary_residue
from .kernel import DirichletKernel, kernel_value, kernel_derivative, kernel_norms
from .presets import preset_signal, signal_from_rows, REFERENCE_BANDWIDTH, REFERENCE_SAMPLES
from .engine import BandlimitedEngine

__all__ = [
    'TorusSignal',
    'SampleGrid',
    'evaluate',
    'sample',
    'reference_signal',
    'imaginary_residue',
    'DirichletKernel',
    'kernel_value',
    'kernel_derivative',
    'kernel_norms',
    'preset_signal',
    'signal_from_rows',
    'REFERENCE_BANDWIDTH',
    'REFERENCE_SAMPLES',
    'BandlimitedEngine',
]
