"""
Shared components for Sigma-Delta Circle
"""

from .base import BaseFeature, ToolResponse, to_jsonable
from .config import Settings, load_settings, configure_logging
from .errors import (
    SigmaDeltaError,
    UndersampledError,
    NonRealSignalError,
    InvalidTabCount,
    InvalidFilterError,
    EmptyGrid,
    LengthMismatch,
    StabilityLost,
    ConfigError,
    ReportWriteError,
)
from .types import DifferenceDirection, SignalPreset, CheckStatus

__all__ = [
    'BaseFeature',
    'ToolResponse',
    'to_jsonable',
    'Settings',
    'load_settings',
    'configure_logging',
    'SigmaDeltaError',
    'UndersampledError',
    'NonRealSignalError',
    'InvalidTabCount',
    'InvalidFilterError',
    'EmptyGrid',
    'LengthMismatch',
    'StabilityLost',
    'ConfigError',
    'ReportWriteError',
    'DifferenceDirection',
    'SignalPreset',
    'CheckStatus',
]
