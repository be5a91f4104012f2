"""
K-bandlimited real functions on the unit circle and their uniform samples
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Union

import numpy as np

from ...shared.errors import NonRealSignalError, UndersampledError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, Sequence[float], np.ndarray]

# Relative tolerance for the conjugate symmetry check c_{-k} = conj(c_k)
_SYMMETRY_TOLERANCE = 1e-12


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, copy=True)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class TorusSignal:
    """
    Real K-bandlimited function f(t) = sum_{|k|<=K} c_k e^{ikt}

    ``coefficients[k + K]`` holds c_k for k = -K..K.
    """
    bandwidth: int
    coefficients: np.ndarray

    def __post_init__(self):
        if self.bandwidth < 0:
            raise ValueError(f"Bandwidth must be nonnegative, got {self.bandwidth}")
        coefficients = np.asarray(self.coefficients, dtype=complex)
        if coefficients.shape != (2 * self.bandwidth + 1,):
            raise ValueError(
                f"Expected {2 * self.bandwidth + 1} coefficients for K={self.bandwidth}, got {coefficients.shape}"
            )
        scale = max(1.0, float(np.max(np.abs(coefficients))))
        asymmetry = float(np.max(np.abs(coefficients - np.conj(coefficients[::-1]))))
        if asymmetry > _SYMMETRY_TOLERANCE * scale:
            raise NonRealSignalError(f"Coefficients are not conjugate symmetric (residue {asymmetry:.3e})")
        object.__setattr__(self, "coefficients", _frozen(coefficients))

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.bandwidth, self.bandwidth + 1)

    def coefficient(self, k: int) -> complex:
        if abs(k) > self.bandwidth:
            return 0j
        return complex(self.coefficients[k + self.bandwidth])

    @classmethod
    def constant(cls, value: float) -> "TorusSignal":
        return cls(bandwidth=0, coefficients=np.array([value], dtype=complex))

    @classmethod
    def from_trigonometric(
        cls,
        constant: float = 0.0,
        cosines: Optional[Dict[int, float]] = None,
        sines: Optional[Dict[int, float]] = None,
        bandwidth: Optional[int] = None,
    ) -> "TorusSignal":
        """
        Build c + sum a_k cos(kt) + sum b_k sin(kt) by exact coefficient entry

        Args:
            constant: Mean value c_0
            cosines: Map k -> a_k for k >= 1
            sines: Map k -> b_k for k >= 1
            bandwidth: Optional K; defaults to the largest frequency used
        """
        cosines = dict(cosines or {})
        sines = dict(sines or {})
        used = list(cosines) + list(sines)
        if any(k < 1 for k in used):
            raise ValueError("Trigonometric frequencies must be positive integers")
        top = max(used, default=0)
        K = top if bandwidth is None else bandwidth
        if K < top:
            raise ValueError(f"Bandwidth {K} is smaller than the highest frequency {top}")

        coefficients = np.zeros(2 * K + 1, dtype=complex)
        coefficients[K] = constant
        for k, a in cosines.items():
            coefficients[K + k] += a / 2
            coefficients[K - k] += a / 2
        for k, b in sines.items():
            # sin(kt) = (e^{ikt} - e^{-ikt}) / 2i
            coefficients[K + k] += -0.5j * b
            coefficients[K - k] += 0.5j * b
        return cls(bandwidth=K, coefficients=coefficients)

    @classmethod
    def random(cls, bandwidth: int, rng: np.random.Generator, amplitude: float = 1.0) -> "TorusSignal":
        """Random real signal with coefficients of magnitude at most amplitude/(2K+1)"""
        K = bandwidth
        scale = amplitude / (2 * K + 1)
        positive = scale * (rng.uniform(-1, 1, K) + 1j * rng.uniform(-1, 1, K))
        coefficients = np.concatenate([np.conj(positive[::-1]), [scale * rng.uniform(-1, 1)], positive])
        return cls(bandwidth=K, coefficients=coefficients)

    def scaled(self, factor: float) -> "TorusSignal":
        return TorusSignal(self.bandwidth, self.coefficients * factor)

    def shifted(self, delta: float) -> "TorusSignal":
        """The signal f + delta"""
        coefficients = np.array(self.coefficients)
        coefficients[self.bandwidth] += delta
        return TorusSignal(self.bandwidth, coefficients)

    def __sub__(self, other: "TorusSignal") -> "TorusSignal":
        K = max(self.bandwidth, other.bandwidth)
        coefficients = np.zeros(2 * K + 1, dtype=complex)
        coefficients[K - self.bandwidth:K + self.bandwidth + 1] += self.coefficients
        coefficients[K - other.bandwidth:K + other.bandwidth + 1] -= other.coefficients
        return TorusSignal(K, coefficients)

    def on_uniform_grid(self, points: int) -> np.ndarray:
        """Evaluate at t_j = 2*pi*j/points for j = 0..points-1 via an inverse FFT"""
        if points < 2 * self.bandwidth + 1:
            raise UndersampledError(points, self.bandwidth)
        spectrum = np.zeros(points, dtype=complex)
        spectrum[self.frequencies % points] = self.coefficients
        return np.real(np.fft.ifft(spectrum) * points)


def evaluate(signal: TorusSignal, t: ArrayLike) -> Union[float, np.ndarray]:
    """
    Evaluate sum_k c_k e^{ikt}, discarding the (round-off) imaginary part

    Accepts a scalar angle or an array of angles.
    """
    angles = np.asarray(t, dtype=float)
    phases = np.exp(1j * np.multiply.outer(angles, signal.frequencies))
    values = np.real(phases @ signal.coefficients)
    if angles.ndim == 0:
        return float(values)
    return values


def imaginary_residue(signal: TorusSignal, t: ArrayLike) -> float:
    """Largest imaginary part of the Fourier synthesis over the given angles"""
    angles = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.exp(1j * np.multiply.outer(angles, signal.frequencies))
    return float(np.max(np.abs(np.imag(phases @ signal.coefficients))))


@dataclass(frozen=True, eq=False)
class SampleGrid:
    """N uniform samples y_n = f(2*pi*n/N) of a K-bandlimited function"""
    samples: np.ndarray
    bandwidth: int = 0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1:
            raise ValueError("Samples must be a one-dimensional sequence")
        if samples.size and samples.size < 2 * self.bandwidth + 1:
            raise UndersampledError(samples.size, self.bandwidth)
        object.__setattr__(self, "samples", _frozen(samples))

    @classmethod
    def from_values(cls, values: Sequence[float], bandwidth: int = 0) -> "SampleGrid":
        return cls(samples=np.asarray(values, dtype=float), bandwidth=bandwidth)

    @property
    def n_samples(self) -> int:
        return int(self.samples.size)

    @property
    def oversampling(self) -> float:
        """lambda = (N-1)/(2K)"""
        if self.bandwidth == 0:
            return float("inf")
        return (self.n_samples - 1) / (2 * self.bandwidth)

    @property
    def max_abs(self) -> float:
        """||y||_inf"""
        return float(np.max(np.abs(self.samples))) if self.n_samples else 0.0

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_samples) / self.n_samples

    def shifted(self, delta: float) -> "SampleGrid":
        """Samples y_n + delta of the shifted function f + delta"""
        return SampleGrid(self.samples + delta, self.bandwidth)


def sample(signal: TorusSignal, N: int) -> SampleGrid:
    """
    Sample a signal at 2*pi*n/N, n = 0..N-1

    Raises:
        UndersampledError: if N < 2K+1
    """
    if N < 2 * signal.bandwidth + 1:
        raise UndersampledError(N, signal.bandwidth)
    grid = SampleGrid(signal.on_uniform_grid(N), signal.bandwidth)
    logger.debug(f"Sampled K={signal.bandwidth} signal at N={N} (lambda={grid.oversampling:.2f})")
    return grid


def reference_signal() -> TorusSignal:
    """f(t) = 0.1 sin(5t) cos(10t) + 0.2 = 0.2 - 0.05 sin(5t) + 0.05 sin(15t)"""
    return TorusSignal.from_trigonometric(constant=0.2, sines={5: -0.05, 15: 0.05})
