"""
Shared fixtures for the Sigma-Delta Circle test suite
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from sigma_delta_circle.features.bandlimited import DirichletKernel, reference_signal, sample  # noqa: E402
from sigma_delta_circle.features.bandlimited.presets import REFERENCE_SAMPLES  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def signal():
    """f(t) = 0.1 sin(5t) cos(10t) + 0.2, K = 15"""
    return reference_signal()


@pytest.fixture(scope="session")
def kernel():
    return DirichletKernel(15)


@pytest.fixture(scope="session")
def reference_grid(signal):
    return sample(signal, REFERENCE_SAMPLES)


@pytest.fixture(scope="session")
def small_grid(signal):
    return sample(signal, 601)
