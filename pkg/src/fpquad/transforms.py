"""Double-exponential variable transforms for the trapezoidal sum.

Both transforms are odd in ``v`` with an even, positive derivative, so the
sample points ``+kh`` and ``-kh`` land on mirror-image parameter values.
"""

from __future__ import annotations

import enum
import math
import sys

__all__ = ["DETransformKind", "psi", "psi_prime", "max_abs_v"]

_LOG_MAX = math.log(sys.float_info.max)


class DETransformKind(str, enum.Enum):
    """Which transform to apply to the contour parameter.

    ``SINH_SINH`` suits integrands decaying algebraically along the contour,
    ``SINH`` those that already decay exponentially.
    """

    SINH_SINH = "sinhsinh"
    SINH = "sinh"

    @classmethod
    def coerce(cls, kind) -> "DETransformKind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown transform {kind!r}; expected one of {choices}") from None


def max_abs_v(kind: DETransformKind) -> float:
    """Largest ``|v|`` the transform accepts before it would overflow."""
    kind = DETransformKind.coerce(kind)
    if kind is DETransformKind.SINH_SINH:
        # exp(exp(|v|)) must stay representable
        return math.log(_LOG_MAX)
    return _LOG_MAX


def _check_range(kind: DETransformKind, v: float) -> None:
    if not math.isfinite(v):
        raise ValueError(f"v must be finite, got {v!r}")
    if abs(v) > max_abs_v(kind):
        raise OverflowError(f"|v| = {abs(v):g} is beyond the range of the {kind.value} transform")


def psi(kind, v: float) -> float:
    """Evaluate the transform at ``v``."""
    kind = DETransformKind.coerce(kind)
    _check_range(kind, v)
    if kind is DETransformKind.SINH_SINH:
        return math.sinh(math.sinh(v))
    return math.sinh(v)


def psi_prime(kind, v: float) -> float:
    """Derivative of :func:`psi` with respect to ``v``."""
    kind = DETransformKind.coerce(kind)
    _check_range(kind, v)
    if kind is DETransformKind.SINH_SINH:
        return math.cosh(math.sinh(v)) * math.cosh(v)
    return math.cosh(v)
