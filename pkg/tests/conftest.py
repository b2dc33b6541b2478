import math

import numpy as np
import pytest

from qwline import Coin, Spinor, make_coin, make_spinor

SQ2 = 1.0 / math.sqrt(2.0)


def random_coin(rng, min_entry: float = 0.15) -> Coin:
    """Haar-ish random SU(2) coin with both entries bounded away from 0."""
    while True:
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        coin = make_coin(complex(v[0], v[1]), complex(v[2], v[3]))
        if min(coin.abs_a, coin.abs_b) >= min_entry:
            return coin


def random_spinor(rng) -> Spinor:
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return make_spinor(complex(v[0], v[1]), complex(v[2], v[3]))


@pytest.fixture
def hadamard() -> Coin:
    return make_coin(SQ2, SQ2)


@pytest.fixture
def symmetric_spinor() -> Spinor:
    # skew functional vanishes for this state with any real-entry coin
    return make_spinor(SQ2, SQ2 * 1j)


@pytest.fixture
def up_spinor() -> Spinor:
    return make_spinor(1.0, 0.0)
