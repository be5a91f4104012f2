"""
Low-pass reconstruction on the circle

    f_r(t) = (1/N) sum_{n=0}^{N-1} a_n phi^K(t - 2*pi*n/N)

with a_n either exact samples y_n or bits q_n.
"""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from ...shared.errors import LengthMismatch
from ..bandlimited.kernel import DirichletKernel, kernel_value
from ..bandlimited.signal import TorusSignal

ArrayLike = Union[float, np.ndarray]

_MAX_BLOCK_ENTRIES = 1 << 22


@dataclass(frozen=True, eq=False)
class Reconstruction:
    """Dirichlet-kernel expansion of N coefficients"""
    n_samples: int
    coefficients: np.ndarray
    kernel: DirichletKernel

    def __post_init__(self):
        coefficients = np.asarray(self.coefficients, dtype=float)
        if coefficients.ndim != 1 or coefficients.size != self.n_samples:
            raise LengthMismatch(f"Expected {self.n_samples} coefficients, got {coefficients.size}")
        coefficients = coefficients.copy()
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def nodes(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_samples) / self.n_samples

    def value(self, t: ArrayLike) -> ArrayLike:
        """Direct O(N) summation per evaluation point"""
        angles = np.asarray(t, dtype=float)
        flat = np.atleast_1d(angles).ravel()
        result = np.empty(flat.shape)
        rows = max(1, _MAX_BLOCK_ENTRIES // self.n_samples)
        for start in range(0, flat.size, rows):
            block = kernel_value(self.kernel, np.subtract.outer(flat[start:start + rows], self.nodes))
            result[start:start + rows] = block @ self.coefficients / self.n_samples
        if angles.ndim == 0:
            return float(result[0])
        return result.reshape(angles.shape)

    def fourier_coefficients(self) -> np.ndarray:
        """c_k = (1/N) sum_n a_n e^{-2*pi*i*k*n/N} for k = -K..K"""
        K = self.kernel.bandwidth
        spectrum = np.fft.fft(self.coefficients) / self.n_samples
        coefficients = spectrum[np.arange(-K, K + 1) % self.n_samples]
        return (coefficients + np.conj(coefficients[::-1])) / 2

    def to_signal(self) -> TorusSignal:
        """The reconstruction as a K-bandlimited signal"""
        return TorusSignal(self.kernel.bandwidth, self.fourier_coefficients())

    def on_uniform_grid(self, points: int) -> np.ndarray:
        """FFT batch evaluation at 2*pi*j/points"""
        return self.to_signal().on_uniform_grid(points)


def reconstruct(coefficients: Sequence[float], N: int, kernel: DirichletKernel, t: ArrayLike) -> ArrayLike:
    """
    Value of the low-pass expansion at t

    Raises:
        LengthMismatch: if len(coefficients) != N
    """
    return Reconstruction(N, np.asarray(coefficients, dtype=float), kernel).value(t)
