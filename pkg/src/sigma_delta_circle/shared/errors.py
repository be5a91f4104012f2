"""
Exception hierarchy for Sigma-Delta Circle
"""


class SigmaDeltaError(Exception):
    """Base class for all library errors"""


class UndersampledError(SigmaDeltaError):
    """Raised when N < 2K+1 samples are requested"""

    def __init__(self, n_samples: int, bandwidth: int):
        self.n_samples = n_samples
        self.bandwidth = bandwidth
        super().__init__(
            f"N={n_samples} samples cannot represent bandwidth K={bandwidth}; need N >= {2 * bandwidth + 1}"
        )


class NonRealSignalError(SigmaDeltaError):
    """Raised when Fourier coefficients violate c_{-k} = conj(c_k)"""


class InvalidTabCount(SigmaDeltaError):
    """Raised when a second order filter is requested with fewer than two tabs"""


class InvalidFilterError(SigmaDeltaError):
    """Raised when feedback taps do not admit a finitely supported g filter"""


class EmptyGrid(SigmaDeltaError):
    """Raised when quantizing a grid with no samples"""


class LengthMismatch(SigmaDeltaError):
    """Raised when a coefficient sequence does not have N entries"""


class StabilityLost(SigmaDeltaError):
    """Raised when updated samples no longer satisfy the stability criterion"""


class ConfigError(SigmaDeltaError):
    """Raised for invalid experiment configuration"""


class ReportWriteError(SigmaDeltaError):
    """Raised when a report file cannot be written"""

    def __init__(self, path, error: Exception):
        self.path = path
        super().__init__(f"Could not write {path}: {error}")
