"""Brute-force reference values from the epsilon-limit definition.

For ``eps > 0`` the bracket

    int_eps^inf x^-n f(x) dx
        - sum_{k=0}^{n-2} eps^(k+1-n) f^(k)(0) / (k! (n-1-k))
        + log(eps) f^(n-1)(0) / (n-1)!

differs from the finite part by a power series in ``eps`` with no constant
term, so polynomial extrapolation to ``eps = 0`` recovers the limit.  The
ordinary integral uses its own exp-sinh rule, which shares no code with the
contour engine.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import NotConverged, OracleUnstable
from .integrands import BUILTIN_INTEGRANDS, Integrand

__all__ = [
    "Extrapolation",
    "EpsilonSchedule",
    "ExactValue",
    "integrate_tail",
    "fp_by_definition",
    "fp_oracle",
    "exact_value",
    "exact_values",
    "default_schedule",
]


class Extrapolation(str, enum.Enum):
    NONE = "none"
    RICHARDSON = "richardson"


@dataclass(frozen=True)
class EpsilonSchedule:
    """Strictly decreasing cutoffs at which the bracket is evaluated."""

    eps_values: Sequence[float]
    extrapolation: Extrapolation = Extrapolation.RICHARDSON

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps_values)
        if not eps:
            raise ValueError("eps_values must be nonempty")
        if any(e <= 0 for e in eps):
            raise ValueError("eps_values must be positive")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("eps_values must be strictly decreasing")
        object.__setattr__(self, "eps_values", eps)
        object.__setattr__(self, "extrapolation", Extrapolation(self.extrapolation))


def default_schedule() -> EpsilonSchedule:
    # halving from 0.1: the eps^(1-n) terms cancel catastrophically below ~1e-3 for n = 4
    return EpsilonSchedule([0.1 * 2.0 ** -j for j in range(8)])


@dataclass(frozen=True)
class ExactValue:
    integrand_name: str
    n: int
    value: float


def exact_value(integrand_name: str, n: int) -> Optional[float]:
    """Closed-form finite part for a builtin integrand, or None if unknown."""
    integrand = BUILTIN_INTEGRANDS.get(integrand_name)
    if integrand is None:
        return None
    return integrand.exact_values.get(n)


def exact_values():
    """All registered closed forms as :class:`ExactValue` records."""
    return [
        ExactValue(name, n, value)
        for name, integrand in sorted(BUILTIN_INTEGRANDS.items())
        for n, value in sorted(integrand.exact_values.items())
    ]


def _real(f, x):
    return complex(f(x)).real


def integrate_tail(g, a: float, tol: float = 1e-13, t_max: float = 6.0,
                   h0: float = 0.25, h_min: float = 2.0 ** -9) -> float:
    """``int_a^inf g(x) dx`` by the exp-sinh rule ``x = a + exp((pi/2) sinh t)``.

    The mesh is halved until two successive sums agree to ``tol`` relative
    to the sum of absolute contributions.
    """

    def trapezoid(h):
        k_max = int(t_max / h)
        vals = []
        mags = []
        for k in range(-k_max, k_max + 1):
            t = k * h
            s = 0.5 * math.pi * math.sinh(t)
            if s > 700.0:
                continue
            e = math.exp(s)
            w = e * 0.5 * math.pi * math.cosh(t)
            val = g(a + e) * w
            vals.append(val)
            mags.append(abs(val))
        return h * math.fsum(vals), h * math.fsum(mags)

    h = h0
    prev, _ = trapezoid(h)
    while h > h_min:
        h /= 2
        cur, mag = trapezoid(h)
        if abs(cur - prev) <= tol * max(mag, 1e-300):
            return cur
        prev = cur
    raise NotConverged(f"exp-sinh rule on [{a:g}, inf) did not reach tol={tol:g}")


def fp_by_definition(integrand: Integrand, n: int, eps: float) -> float:
    """The bracketed quantity of the epsilon-limit definition at one ``eps``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    derivs = integrand.derivatives_at_zero
    if derivs is None or len(derivs) < n:
        raise ValueError(
            f"{integrand.name}: need f^(k)(0) for k < {n}, "
            f"have {0 if derivs is None else len(derivs)}"
        )
    f = integrand.f
    tail = integrate_tail(lambda x: x ** -n * _real(f, x), eps)
    poles = math.fsum(
        eps ** (k + 1 - n) / (math.factorial(k) * (n - 1 - k)) * derivs[k]
        for k in range(n - 1)
    )
    return tail - poles + math.log(eps) / math.factorial(n - 1) * derivs[n - 1]


def _neville_at_zero(xs, ys):
    """Columns of the Neville tableau for the polynomial through (xs, ys) at 0."""
    columns = [list(ys)]
    for j in range(1, len(xs)):
        prev = columns[-1]
        columns.append([
            (xs[i] * prev[i + 1] - xs[i + j] * prev[i]) / (xs[i] - xs[i + j])
            for i in range(len(xs) - j)
        ])
    return columns


def fp_oracle(integrand: Integrand, n: int, schedule: Optional[EpsilonSchedule] = None,
              unstable_tol: float = 1e-4) -> float:
    """Finite part as the extrapolated epsilon limit.

    Expect about six correct digits, fewer as ``n`` grows.  Raises
    :class:`OracleUnstable` when successive estimates disagree by more than
    ``unstable_tol`` (relative to ``max(1, |value|)``).
    """
    schedule = default_schedule() if schedule is None else schedule
    eps = schedule.eps_values
    vals = [fp_by_definition(integrand, n, e) for e in eps]

    if schedule.extrapolation is Extrapolation.NONE or len(vals) < 2:
        if len(vals) >= 3:
            d1, d2 = abs(vals[-2] - vals[-3]), abs(vals[-1] - vals[-2])
            if d2 > d1:
                raise OracleUnstable(f"{integrand.name}, n={n}: bracket sequence is not settling")
        return vals[-1]

    columns = _neville_at_zero(eps, vals)
    # most-extrapolated estimate from the smallest eps values, one per order
    estimates = [col[-1] for col in columns]
    best, best_err = estimates[0], math.inf
    for lo, hi in zip(estimates, estimates[1:]):
        err = abs(hi - lo)
        if err < best_err:
            best, best_err = hi, err
    if best_err > unstable_tol * max(1.0, abs(best)):
        raise OracleUnstable(
            f"{integrand.name}, n={n}: extrapolated estimates disagree by {best_err:.2e}"
        )
    return best
