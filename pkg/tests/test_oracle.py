import math

import mpmath
import pytest

from fpquad import BUILTIN_INTEGRANDS, EULER_GAMMA, FpProblem, Integrand, compute_symmetric, get_integrand
from fpquad.exceptions import OracleUnstable
from fpquad.oracle import (
    EpsilonSchedule, Extrapolation, default_schedule, exact_value, exact_values,
    fp_by_definition, fp_oracle, integrate_tail,
)

CASES = [(name, n) for name in sorted(BUILTIN_INTEGRANDS) for n in range(1, 5)]

# mpmath, 20 digits
EXACT_DECIMALS = {
    ("exp_decay", 1): -0.57721566490153286061,
    ("exp_decay", 2): -0.42278433509846713939,
    ("exp_decay", 3): 0.4613921675492335697,
    ("exp_decay", 4): -0.20935294473863341212,
    ("one_over_1px2", 1): 0.0,
    ("one_over_1px2", 2): -1.5707963267948966192,
    ("one_over_1px2", 3): 0.0,
    ("one_over_1px2", 4): 1.5707963267948966192,
}


def test_euler_gamma():
    mpmath.mp.dps = 30
    assert EULER_GAMMA == pytest.approx(float(mpmath.euler), rel=1e-16)
    # harmonic partial sum with its asymptotic correction
    m = 10_000
    harmonic = math.fsum(1.0 / k for k in range(1, m + 1))
    estimate = harmonic - math.log(m) - 1 / (2 * m) + 1 / (12 * m * m)
    assert estimate == pytest.approx(EULER_GAMMA, abs=1e-14)


@pytest.mark.parametrize("name,n", CASES)
def test_exact_registry(name, n):
    assert exact_value(name, n) == pytest.approx(EXACT_DECIMALS[name, n], rel=1e-15, abs=0)


def test_exact_registry_misses():
    assert exact_value("one_over_1px2", 5) is None
    assert exact_value("nope", 1) is None
    assert len(exact_values()) == 8


@pytest.mark.parametrize("name", sorted(BUILTIN_INTEGRANDS))
def test_builtin_derivatives(name):
    integrand = get_integrand(name)
    mpmath.mp.dps = 30
    g = {"one_over_1px2": lambda x: 1 / (1 + x * x), "exp_decay": mpmath.exp}[name]
    sign = -1 if name == "exp_decay" else 1
    for k, dk in enumerate(integrand.derivatives_at_zero[:8]):
        assert dk == pytest.approx(float(mpmath.diff(lambda x: g(sign * x), 0, k)), abs=1e-12)


# ---------------------------------------------------------------- tail quadrature


@pytest.mark.parametrize("g,a,expected", [
    (lambda x: x ** -2, 1.0, 1.0),
    (lambda x: math.exp(-x), 0.5, math.exp(-0.5)),
    (lambda x: 1 / (x * (1 + x * x)), 1e-3, 0.5 * math.log1p(1e6)),
    (lambda x: x ** -4 * math.exp(-x), 0.01, None),
])
def test_integrate_tail(g, a, expected):
    value = integrate_tail(g, a)
    if expected is None:
        mpmath.mp.dps = 30
        expected = float(mpmath.quad(lambda x: x ** -4 * mpmath.exp(-x), [a, 1, mpmath.inf]))
    assert value == pytest.approx(expected, rel=1e-12)


# ---------------------------------------------------------------- bracket


def test_bracket_n1_exp():
    value = fp_by_definition(get_integrand("exp_decay"), 1, 1e-4)
    assert abs(value + EULER_GAMMA) == pytest.approx(1e-4, rel=1e-3)


def test_bracket_n1_rational():
    value = fp_by_definition(get_integrand("one_over_1px2"), 1, 1e-3)
    assert abs(value) < 1e-3


def test_bracket_n1_is_log_correction_only():
    # derivatives beyond f(0) must not matter for n = 1
    f = get_integrand("exp_decay")
    trimmed = Integrand(f.f, name="trimmed", derivatives_at_zero=(1.0,))
    eps = 1e-2
    assert fp_by_definition(trimmed, 1, eps) == fp_by_definition(f, 1, eps)
    tail = integrate_tail(lambda x: math.exp(-x) / x, eps)
    assert fp_by_definition(f, 1, eps) == pytest.approx(tail + math.log(eps), rel=1e-15)


def test_bracket_converges_linearly_in_eps():
    f = get_integrand("exp_decay")
    for eps in (1e-2, 1e-3, 1e-4):
        err = fp_by_definition(f, 1, eps) + EULER_GAMMA
        # remainder: eps - eps^2/4 + ...
        assert err / eps == pytest.approx(1.0, rel=0.01)


def test_bracket_needs_derivatives():
    f = Integrand(lambda z: 1.0 / (1 + z), name="nodata")
    with pytest.raises(ValueError):
        fp_by_definition(f, 2, 0.1)
    short = Integrand(f.f, derivatives_at_zero=(1.0,))
    with pytest.raises(ValueError):
        fp_by_definition(short, 2, 0.1)
    with pytest.raises(ValueError):
        fp_by_definition(get_integrand("exp_decay"), 1, 0.0)


# ---------------------------------------------------------------- extrapolated limit


@pytest.mark.parametrize("name,n,tol", [
    ("exp_decay", 2, 1e-6),
    ("one_over_1px2", 2, 1e-6),
    ("one_over_1px2", 4, 1e-5),
])
def test_oracle_examples(name, n, tol):
    assert abs(fp_oracle(get_integrand(name), n) - exact_value(name, n)) <= tol


@pytest.mark.parametrize("name,n", CASES)
def test_oracle_agrees_with_engine(name, n):
    integrand = get_integrand(name)
    engine = compute_symmetric(FpProblem(integrand, n)).value
    oracle = fp_oracle(integrand, n)
    gap = abs(engine - oracle)
    assert gap <= 1e-5 * (abs(engine) if abs(engine) > 1e-14 else 1.0)


def test_user_integrand_through_oracle():
    # f = 1/(1+x)^2: fp int_0^inf x^-1 (1+x)^-2 dx = -1
    f = Integrand(lambda z: 1 / (1 + z) ** 2, name="shifted",
                  derivatives_at_zero=tuple((-1) ** k * math.factorial(k + 1) for k in range(6)))
    assert fp_oracle(f, 1) == pytest.approx(-1.0, abs=1e-7)
    assert compute_symmetric(FpProblem(f, 1)).value == pytest.approx(-1.0, rel=1e-12)


def test_no_extrapolation_returns_smallest_eps():
    f = get_integrand("exp_decay")
    sched = EpsilonSchedule([1e-2, 1e-3, 1e-4], Extrapolation.NONE)
    assert fp_oracle(f, 1, sched) == fp_by_definition(f, 1, 1e-4)


def test_unstable_tail_detected():
    f = get_integrand("one_over_1px2")
    # eps^-3 cancellation swamps double precision below ~1e-5
    with pytest.raises(OracleUnstable):
        fp_oracle(f, 4, EpsilonSchedule([1e-4, 1e-5, 1e-6, 1e-7], "none"))
    with pytest.raises(OracleUnstable):
        fp_oracle(f, 4, EpsilonSchedule([1e-5, 1e-6, 1e-7, 1e-8]))


@pytest.mark.parametrize("eps", [[], [0.1, 0.1], [0.1, 0.2], [0.1, -0.01]])
def test_schedule_validation(eps):
    with pytest.raises(ValueError):
        EpsilonSchedule(eps)


def test_default_schedule_shape():
    eps = default_schedule().eps_values
    assert eps[0] == 0.1 and len(eps) == 8
    assert all(b == a / 2 for a, b in zip(eps, eps[1:]))
