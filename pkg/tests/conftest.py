"""
conftest
========

Configuration file for pytest.

Fixtures
--------
rng
    Seeded random generator, fresh for each test.
alpha
    Parametrised weight covering the integer, half-integer and generic cases.
"""
import numpy as np
import pytest

ALPHAS = [1.5, 2.0, 2.75]


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(20240517)


@pytest.fixture(params=ALPHAS, ids=lambda a: f"alpha={a}")
def alpha(request):
    """Weight of the representation."""
    return request.param
