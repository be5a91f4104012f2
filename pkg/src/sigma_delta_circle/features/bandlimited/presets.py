"""
Named input signals and coefficient-row signal specifications
"""

from typing import Iterable, Optional, Sequence

from ...shared.errors import ConfigError
from ...shared.types import SignalPreset
from .signal import TorusSignal, reference_signal

REFERENCE_BANDWIDTH = 15
REFERENCE_SAMPLES = 9002


def preset_signal(name: str, n_samples: Optional[int] = None) -> TorusSignal:
    """
    Resolve a preset name to a signal

    Args:
        name: One of paper-fig1, zero, half-step
        n_samples: Required for half-step, the constant 1/(2N)
    """
    try:
        preset = SignalPreset(name.lower())
    except ValueError:
        raise ConfigError(f"Unknown signal preset '{name}'. Must be one of: {', '.join(SignalPreset.values())}")

    if preset == SignalPreset.FIGURE1:
        return reference_signal()
    if preset == SignalPreset.ZERO:
        return TorusSignal.from_trigonometric(bandwidth=REFERENCE_BANDWIDTH)
    if not n_samples:
        raise ConfigError("The half-step preset needs the sample count N")
    return TorusSignal.constant(1.0 / (2 * n_samples))


def signal_from_rows(
    rows: Iterable[Sequence[float]],
    constant: float = 0.0,
    bandwidth: Optional[int] = None,
) -> TorusSignal:
    """Build a signal from [k, cos_amp, sin_amp] rows"""
    cosines = {}
    sines = {}
    for row in rows:
        if len(row) != 3:
            raise ConfigError(f"Signal rows must be [k, cos_amp, sin_amp], got {list(row)}")
        k, a, b = row
        if int(k) != k or k < 1:
            raise ConfigError(f"Signal frequency must be a positive integer, got {k}")
        k = int(k)
        cosines[k] = cosines.get(k, 0.0) + float(a)
        sines[k] = sines.get(k, 0.0) + float(b)
    try:
        return TorusSignal.from_trigonometric(constant=constant, cosines=cosines, sines=sines, bandwidth=bandwidth)
    except ValueError as e:
        raise ConfigError(str(e))
