import mpmath
import numpy as np
import pytest

mpmath.mp.dps = 30


def rel(a, b):
    a, b = complex(a), complex(b)
    return abs(a - b) / max(abs(b), 1e-300)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
