import numpy as np
import pytest

from qdesk.shared.utils import normalize
from qdesk.simulator import RegisterLayout, StateVector


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_state(rng, layout: RegisterLayout) -> StateVector:
    vector = rng.normal(size=layout.dimension) + 1j * rng.normal(size=layout.dimension)
    return StateVector(layout=layout, amplitudes=normalize(vector))


def random_unitary(rng, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))[np.newaxis, :]


def random_vector(rng, size: int) -> np.ndarray:
    return rng.normal(size=size) + 1j * rng.normal(size=size)
