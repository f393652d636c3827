import numpy as np
import pytest

from starkernel import FockSpace


@pytest.fixture(scope="session")
def fock60():
    return FockSpace(60)


@pytest.fixture(scope="session")
def fock80():
    return FockSpace(80)


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)


def random_complex(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)
