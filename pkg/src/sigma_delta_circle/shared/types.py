"""
Shared types and constants for Sigma-Delta Circle
"""

from enum import Enum


class DifferenceDirection(str, Enum):
    """Direction of a finite difference operator"""
    BACKWARD = "backward"
    FORWARD = "forward"

    @classmethod
    def values(cls):
        return [d.value for d in cls]


class SignalPreset(str, Enum):
    """Named input signals for experiments"""
    FIGURE1 = "paper-fig1"
    ZERO = "zero"
    HALF_STEP = "half-step"

    @classmethod
    def values(cls):
        return [p.value for p in cls]


class CheckStatus(str, Enum):
    """Outcome of a verification check"""
    PASS = "PASS"
    FAIL = "FAIL"

    @classmethod
    def values(cls):
        return [s.value for s in cls]


# Exit codes of the command line interface
EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_ACCEPTANCE_FAILURE = 2

# Numerical tolerances shared across features
IDENTITY_TOLERANCE = 1e-9
RECURRENCE_TOLERANCE = 1e-10
REMOVABLE_SINGULARITY_THRESHOLD = 1e-6

CSV_FLOAT_FORMAT = "%.12e"
