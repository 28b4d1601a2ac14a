"""Integration paths encircling the ray [0, +inf).

The builtin family is

    phi(u) = (w / (i pi)) * log((1 + i w) / (1 - i w)),   w = u + i a,

which starts and ends at ``Re z = +inf`` on the horizontal lines
``Im z = -a`` and ``Im z = +a`` and crosses the negative real axis at
``(a / pi) * log((1 - a) / (1 + a))``.  Traversed in the positive sense
around the ray, ``u`` runs from ``+inf`` down to ``-inf``.  The path object
records that through :attr:`Contour.orientation`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .exceptions import ContourError

__all__ = [
    "Contour",
    "default_contour",
    "scaled_contour",
    "check_contour",
    "is_conjugate_symmetric",
    "on_cut",
    "DEFAULT_SAMPLES",
]

DEFAULT_SAMPLES = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)


@dataclass(frozen=True)
class Contour:
    """A parameterized path ``z = phi(u)``, ``-inf < u < inf``, with its derivative.

    ``orientation`` is ``+1`` if increasing ``u`` traverses the path in the
    positive sense around [0, +inf) and ``-1`` if decreasing ``u`` does.
    The quadrature multiplies the parameter-line integral by this sign.
    """

    phi: Callable[[float], complex]
    phi_prime: Callable[[float], complex]
    descriptor: str = "custom"
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError(f"orientation must be +1 or -1, got {self.orientation!r}")

    def __call__(self, u: float) -> complex:
        return self.phi(u)


def on_cut(z: complex) -> bool:
    """True if ``z`` lies on [0, +inf), where ``log(-z)`` is discontinuous."""
    return z.imag == 0.0 and z.real >= 0.0


def _arctan_family(a: float):
    def phi(u: float) -> complex:
        w = complex(u, a)
        return w / (1j * math.pi) * cmath.log((1 + 1j * w) / (1 - 1j * w))

    def phi_prime(u: float) -> complex:
        w = complex(u, a)
        return (cmath.log((1 + 1j * w) / (1 - 1j * w)) + 2j * w / (1 + w * w)) / (1j * math.pi)

    return phi, phi_prime


def scaled_contour(half_offset: float) -> Contour:
    """The builtin path with the line offset ``a = half_offset``.

    Smaller offsets hug the ray more tightly; the path degenerates onto the
    cut as ``a -> 0`` and crosses zero at ``a = 1``, so ``a`` must lie in
    (0, 1).
    """
    a = float(half_offset)
    if not 0.0 < a < 1.0:
        raise ValueError(f"half_offset must lie in (0, 1), got {half_offset!r}")
    phi, phi_prime = _arctan_family(a)
    return Contour(phi, phi_prime, descriptor=f"arctan(a={a:g})", orientation=-1)


def default_contour() -> Contour:
    """The builtin path with offset 0.5."""
    return scaled_contour(0.5)


def check_contour(contour: Contour, samples: Iterable[float] = DEFAULT_SAMPLES) -> None:
    """Spot-check ``contour`` at ``+u`` and ``-u`` for each sample.

    Raises :class:`ContourError` if a sample hits [0, +inf) or the
    derivative is not finite.  Used as a cheap debug-mode guard by the
    engine.
    """
    for s in samples:
        for u in (s, -s):
            z = contour.phi(u)
            if on_cut(z) or not cmath.isfinite(z):
                raise ContourError(f"{contour.descriptor}: phi({u:g}) = {z!r} is on [0, +inf)")
            if not cmath.isfinite(contour.phi_prime(u)):
                raise ContourError(f"{contour.descriptor}: phi'({u:g}) is not finite")


def is_conjugate_symmetric(contour: Contour, samples: Iterable[float] = DEFAULT_SAMPLES,
                           rtol: float = 1e-14) -> bool:
    """Check ``phi(-u) == conj(phi(u))`` and ``phi'(-u) == -conj(phi'(u))``."""
    for u in samples:
        z, zm = contour.phi(u), contour.phi(-u)
        d, dm = contour.phi_prime(u), contour.phi_prime(-u)
        if abs(zm - z.conjugate()) > rtol * max(abs(z), 1.0):
            return False
        if abs(dm + d.conjugate()) > rtol * max(abs(d), 1.0):
            return False
    return True
