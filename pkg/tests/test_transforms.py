import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpquad.transforms import DETransformKind, max_abs_v, psi, psi_prime

KINDS = list(DETransformKind)
SS, SINH = DETransformKind.SINH_SINH, DETransformKind.SINH

# mpmath, 30 digits
SINHSINH_AT_1 = 1.46501882481822736122842350685
SINHSINH_PRIME_AT_HALF = 1.28421978667969572601650544298


@pytest.mark.parametrize("kind", KINDS)
def test_origin(kind):
    assert psi(kind, 0.0) == 0.0
    assert psi_prime(kind, 0.0) == 1.0


def test_reference_values():
    assert psi(SS, 1.0) == pytest.approx(SINHSINH_AT_1, rel=1e-15)
    assert psi_prime(SS, 0.5) == pytest.approx(SINHSINH_PRIME_AT_HALF, rel=1e-15)
    assert psi(SINH, 1.0) == pytest.approx(math.sinh(1.0), rel=1e-15)


def test_string_kinds():
    assert psi("sinhsinh", 1.0) == psi(SS, 1.0)
    assert psi("SINH", 1.0) == psi(SINH, 1.0)
    with pytest.raises(ValueError):
        psi("tanhsinh", 1.0)


@pytest.mark.parametrize("kind", KINDS)
@given(v=st.floats(-6.0, 6.0))
def test_parity(kind, v):
    assert psi(kind, -v) == -psi(kind, v)
    assert psi_prime(kind, -v) == psi_prime(kind, v)
    assert psi_prime(kind, v) > 0


@pytest.mark.parametrize("kind", KINDS)
@given(a=st.floats(-6.0, 6.0), b=st.floats(-6.0, 6.0))
def test_strictly_increasing(kind, a, b):
    if a < b and psi(kind, a) != psi(kind, b):
        assert psi(kind, a) < psi(kind, b)


@pytest.mark.parametrize("kind", KINDS)
def test_increasing_on_grid(kind):
    grid = [-3 + 0.01 * i for i in range(601)]
    vals = [psi(kind, v) for v in grid]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("kind", KINDS)
def test_derivative_matches_central_difference(kind):
    step = 1e-6
    for i in range(61):
        v = -3 + 0.1 * i
        fd = (psi(kind, v + step) - psi(kind, v - step)) / (2 * step)
        assert abs(fd - psi_prime(kind, v)) / psi_prime(kind, v) < 1e-6


@pytest.mark.parametrize("kind", KINDS)
def test_range_guard(kind):
    limit = max_abs_v(kind)
    assert math.isfinite(psi(kind, 0.999 * limit))
    for v in (1.001 * limit, -1.001 * limit):
        with pytest.raises(OverflowError):
            psi(kind, v)
        with pytest.raises(OverflowError):
            psi_prime(kind, v)


def test_sinhsinh_guard_threshold():
    # exp(exp(|v|)) must not exceed the largest double
    assert max_abs_v(SS) == pytest.approx(math.log(math.log(1.7976931348623157e308)))


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        psi(SS, math.nan)
