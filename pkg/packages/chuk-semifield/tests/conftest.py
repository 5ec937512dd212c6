"""Pytest configuration and fixtures for chuk-semifield tests."""

import numpy as np
import pytest

from chuk_semifield.config import reset_settings
from chuk_semifield.gf import field_new
from chuk_semifield.linalg import rank_mod_p


@pytest.fixture(autouse=True)
def reset_state():
    """Reset settings and the family registry before each test to avoid state leakage."""
    import chuk_semifield.families.registry as module

    reset_settings()
    module._default_registry = None
    yield
    reset_settings()
    module._default_registry = None


@pytest.fixture
def gf4():
    return field_new(2, 2)


@pytest.fixture
def gf8():
    return field_new(2, 3)


@pytest.fixture
def gf9():
    """GF(9) as F_3[x]/(x^2 + 1): squares are 1, 2, 3, 6; smallest nonsquare 4 = 1 + x."""
    return field_new(3, 2, [1, 0, 1])


@pytest.fixture
def gf16():
    return field_new(2, 4)


@pytest.fixture
def gf27():
    return field_new(3, 3)


@pytest.fixture
def random_invertible():
    """Draw random invertible n x n matrices over F_p from a fixed seed."""
    rng = np.random.default_rng(1)

    def draw(n, p):
        while True:
            cand = rng.integers(0, p, size=(n, n)).astype(np.int64)
            if rank_mod_p(cand, p) == n:
                return cand

    return draw
