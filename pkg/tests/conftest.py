import math

import numpy as np
import pytest

from qwalk1d.coin import hadamard_coin, make_qubit


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def hadamard():
    return hadamard_coin()


@pytest.fixture
def symmetric_qubit():
    return make_qubit(1.0 / math.sqrt(2.0), 1j / math.sqrt(2.0))


@pytest.fixture
def right_qubit():
    return make_qubit(0.0, 1.0)


@pytest.fixture
def left_qubit():
    return make_qubit(1.0, 0.0)
