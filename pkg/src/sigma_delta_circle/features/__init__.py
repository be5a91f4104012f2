"""
Features for Sigma-Delta Circle
"""

from .bandlimited import BandlimitedEngine
from .quantizer import QuantizerEngine
from .reconstruction import ReconstructionEngine
from .analysis.engine import AnalysisEngine
from .update import UpdateEngine
from .harness import HarnessEngine

__all__ = [
    'BandlimitedEngine',
    'QuantizerEngine',
    'ReconstructionEngine',
    'AnalysisEngine',
    'UpdateEngine',
    'HarnessEngine',
]
