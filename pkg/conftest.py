"""
Pytest configuration and fixtures for the Tracepi lab tests.
"""
from fractions import Fraction

import pytest
from hypothesis import settings as hypothesis_settings

from core.sampling import ParameterSampler
from algebra.builders import (
    make_C2,
    make_diagonal_algebra,
    make_matrix_algebra,
    make_UT2_zero_trace,
)

hypothesis_settings.register_profile('ci', deadline=None, print_blob=True)
hypothesis_settings.load_profile('ci')


@pytest.fixture
def sampler():
    """Return a sampler with a fixed seed."""
    return ParameterSampler(20210)


@pytest.fixture
def alpha():
    return Fraction(3, 2)


@pytest.fixture
def beta():
    return Fraction(-2)


@pytest.fixture
def d2_generic(alpha, beta):
    """D2 with tr(e11) = alpha, tr(e22) = beta, alpha != beta."""
    return make_diagonal_algebra([alpha, beta])


@pytest.fixture
def d2_zero(alpha):
    """D2 with the trace t(alpha, 0)."""
    return make_diagonal_algebra([alpha, 0])


@pytest.fixture
def d2_equal(alpha):
    """D2 with the trace t(alpha, alpha)."""
    return make_diagonal_algebra([alpha, alpha])


@pytest.fixture
def c2_one(alpha):
    """C2 with tr(1) = alpha and tr(e12) = 1."""
    return make_C2(alpha, 1)


@pytest.fixture
def c2_zero(alpha):
    """C2 with tr(1) = alpha and tr(e12) = 0."""
    return make_C2(alpha, 0)


@pytest.fixture
def ut2():
    """UT2 with the zero trace."""
    return make_UT2_zero_trace()


@pytest.fixture
def m2(alpha):
    """M2 with alpha times the usual trace."""
    return make_matrix_algebra(2, alpha)


@pytest.fixture
def builtin_algebras(d2_generic, d2_zero, d2_equal, c2_one, c2_zero, ut2):
    """Return the two-dimensional algebras with trace and UT2."""
    return [d2_generic, d2_zero, d2_equal, c2_one, c2_zero, ut2]
