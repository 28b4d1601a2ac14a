"""Integrand container and the two builtin test integrands."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from .transforms import DETransformKind

__all__ = ["Integrand", "BUILTIN_INTEGRANDS", "get_integrand", "EULER_GAMMA"]

EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True)
class Integrand:
    """An analytic ``f`` with optional reference data.

    ``f`` must accept complex arguments.  ``derivatives_at_zero[k]`` is
    ``f^(k)(0)``; the epsilon-limit oracle needs the first ``n`` of them.
    ``exact_values`` maps the singularity order ``n`` to the known
    finite-part value.
    """

    f: Callable[[complex], complex]
    name: str = "custom"
    decay: DETransformKind = DETransformKind.SINH_SINH
    derivatives_at_zero: Optional[Sequence[float]] = None
    exact_values: Mapping[int, float] = field(default_factory=dict)

    def __call__(self, z):
        return self.f(z)


def _one_over_1px2(z):
    if abs(z) > 1e8:
        iz = 1 / z
        return iz * iz / (1 + iz * iz)
    return 1 / (1 + z * z)


def _exp_decay(z):
    z = complex(z)
    # exp(-z) underflows silently for Re z >> 0; guard the other side
    if z.real < -700.0:
        raise OverflowError(f"exp(-z) overflows at z = {z!r}")
    return cmath.exp(-z)


def _taylor_derivs_1px2(order):
    # 1/(1+x^2) = sum (-1)^m x^(2m)
    return tuple(
        0.0 if k % 2 else (-1.0) ** (k // 2) * math.factorial(k) for k in range(order)
    )


_G = EULER_GAMMA

BUILTIN_INTEGRANDS = {
    "one_over_1px2": Integrand(
        f=_one_over_1px2,
        name="one_over_1px2",
        derivatives_at_zero=_taylor_derivs_1px2(12),
        exact_values={1: 0.0, 2: -math.pi / 2, 3: 0.0, 4: math.pi / 2},
    ),
    "exp_decay": Integrand(
        f=_exp_decay,
        name="exp_decay",
        derivatives_at_zero=tuple((-1.0) ** k for k in range(12)),
        exact_values={1: -_G, 2: -1 + _G, 3: 0.75 - _G / 2, 4: -11 / 36 + _G / 6},
    ),
}


def get_integrand(name: str) -> Integrand:
    try:
        return BUILTIN_INTEGRANDS[name]
    except KeyError:
        raise KeyError(
            f"unknown integrand {name!r}; builtins are {sorted(BUILTIN_INTEGRANDS)}"
        ) from None
