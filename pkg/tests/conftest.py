import numpy as np
import pytest

from freqop.hilbert import StateVector


def random_state(rng: np.random.Generator, dim: int) -> StateVector:
    """Haar-ish random normalized complex state."""
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector(amps / np.linalg.norm(amps))


@pytest.fixture
def rng():
    return np.random.default_rng(20260826)
