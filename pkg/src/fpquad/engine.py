"""Contour-integral quadrature for Hadamard finite-part integrals.

For analytic ``f`` the finite part of ``int_0^inf x^-n f(x) dx`` equals

    (1 / (2 pi i)) * contour_integral  z^-n f(z) log(-z) dz

over any path encircling [0, +inf) positively inside the analyticity domain
of ``f``.  With ``z = phi(u)`` and ``u = psi(v)`` the contour integral
becomes an integral over the real ``v`` line, summed here by the trapezoidal
rule with mesh ``h``.  The sum is truncated on each side as soon as a term
drops below the relative tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .contour import Contour, check_contour, default_contour, is_conjugate_symmetric, on_cut
from .exceptions import ContourError, IntegrandError, NotConverged
from .integrands import Integrand
from .transforms import DETransformKind, psi, psi_prime

__all__ = [
    "FpProblem",
    "QuadratureConfig",
    "FpResult",
    "ErrorBoundParams",
    "term",
    "compute_full",
    "compute_symmetric",
    "compute",
    "truncation_should_stop",
    "error_bound",
    "error_bound_terms",
    "ZERO_THRESHOLD",
]

# running values below this are treated as zero by the truncation rule
ZERO_THRESHOLD = 1e-14


@dataclass(frozen=True)
class FpProblem:
    """The finite-part integral of ``x^-n f(x)`` over (0, inf).

    ``transform`` defaults to the integrand's ``decay`` hint.
    """

    integrand: Integrand
    n: int
    contour: Contour = field(default_factory=default_contour)
    transform: Optional[DETransformKind] = None

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"singularity order n must be an integer >= 1, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        kind = self.integrand.decay if self.transform is None else self.transform
        object.__setattr__(self, "transform", DETransformKind.coerce(kind))


@dataclass(frozen=True)
class QuadratureConfig:
    h: float = 2.0 ** -4
    rel_tol: float = 1e-15
    max_terms: int = 10_000
    keep_trace: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise ValueError(f"mesh h must be positive and finite, got {self.h!r}")
        if not 0 < self.rel_tol < 1:
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError(f"max_terms must be a positive integer, got {self.max_terms!r}")


@dataclass
class FpResult:
    """Outcome of one quadrature.

    ``n_pos`` and ``n_neg`` count the terms taken at ``k > 0`` and ``k < 0``
    (``n_neg`` is 0 for the symmetric sum, whose mirror terms are implied).
    ``imag_residual`` is the imaginary part of the full complex sum, which
    vanishes for integrands real on the real axis.  ``term_trace`` holds
    ``(k, |term|)`` pairs when tracing was requested.
    """

    value: float
    n_pos: int
    n_neg: int
    h: float
    imag_residual: float = 0.0
    term_trace: Optional[List[Tuple[int, float]]] = None

    @property
    def n_total(self) -> int:
        """Number of integrand evaluations, the ``k = 0`` point included."""
        return self.n_pos + self.n_neg + 1


@dataclass(frozen=True)
class ErrorBoundParams:
    """Constants entering the a-priori error bound.

    ``d`` is the half-width of the analyticity strip, ``script_n`` the
    boundary norm of the transformed integrand, ``big_c`` the truncation
    constant, and ``c1``, ``c2`` the double-exponential decay rates.  None
    of them is computed here.
    """

    d: float
    script_n: float
    big_c: float
    c1: float
    c2: float

    def __post_init__(self):
        for name in ("d", "c1", "c2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        # zero switches one term of the bound off
        for name in ("script_n", "big_c"):
            if not getattr(self, name) >= 0:
                raise ValueError(f"{name} must be nonnegative")


def term(problem: FpProblem, v: float) -> complex:
    """Transformed integrand ``z^-n f(z) log(-z) phi'(u) psi'(v)`` at ``v``.

    Here ``u = psi(v)`` and ``z = phi(u)``.  The logarithm is the principal
    branch of ``log(-z)``, whose cut is exactly the ray [0, +inf).  Raises
    :class:`OverflowError` if ``v`` is outside the transform's range.
    """
    kind = problem.transform
    u = psi(kind, v)
    jac = psi_prime(kind, v)
    contour = problem.contour
    z = contour.phi(u)
    if on_cut(z):
        raise ContourError(f"phi({u:g}) = {z!r} lies on [0, +inf)")
    try:
        fz = complex(problem.integrand.f(z))
    except (ArithmeticError, ValueError) as exc:
        raise IntegrandError(f"{problem.integrand.name}: evaluation failed at z = {z!r}") from exc
    # (1/z)**n, not z**-n: the latter is nan once z**n overflows
    value = (1 / z) ** problem.n * fz * cmath.log(-z) * contour.phi_prime(u) * jac
    if not cmath.isfinite(value):
        raise IntegrandError(f"{problem.integrand.name}: non-finite term at v = {v:g} (z = {z!r})")
    return value


def truncation_should_stop(k_term_abs: float, running_sum_abs: float, h: float,
                           rel_tol: float) -> bool:
    """Whether the ``k``-th term is small enough to end the sum.

    Relative to the running value when that is nonzero, absolute otherwise.
    """
    weighted = h / math.pi * k_term_abs
    if running_sum_abs >= ZERO_THRESHOLD:
        return weighted < rel_tol * running_sum_abs
    return weighted < rel_tol


def _term_or_not_converged(problem, v, counts):
    try:
        return term(problem, v)
    except OverflowError as exc:
        raise NotConverged(
            f"transform range exhausted at v = {v:g} before the truncation rule fired",
            terms=counts,
        ) from exc


def _debug_checks(problem: FpProblem, symmetric: bool) -> None:
    check_contour(problem.contour)
    if not symmetric:
        return
    if not is_conjugate_symmetric(problem.contour):
        raise ContourError(f"{problem.contour.descriptor} is not conjugate-symmetric")
    for x in (0.25, 1.0, 3.0):
        fx = complex(problem.integrand.f(complex(x)))
        if abs(fx.imag) > 1e-12 * max(abs(fx), 1.0):
            raise ValueError(
                f"{problem.integrand.name} is not real on the real axis (f({x}) = {fx!r}); "
                "use compute_full"
            )


def compute_full(problem: FpProblem, config: QuadratureConfig = QuadratureConfig()) -> FpResult:
    """Trapezoidal sum over both tails of the parameter line.

    Each tail is truncated independently.  The returned value is the real
    part of the sum; the imaginary part is kept in ``imag_residual``.
    """
    if __debug__:
        _debug_checks(problem, symmetric=False)
    h = config.h
    scale = h / (2 * math.pi)
    t0 = term(problem, 0.0)
    terms = [t0]
    trace = [(0, abs(t0))] if config.keep_trace else None
    running = t0
    active = {1: True, -1: True}
    counts = {1: 0, -1: 0}
    for k in range(1, config.max_terms + 1):
        for sign in (1, -1):
            if not active[sign]:
                continue
            t = _term_or_not_converged(problem, sign * k * h, (counts[1], counts[-1]))
            terms.append(t)
            running += t
            counts[sign] = k
            if trace is not None:
                trace.append((sign * k, abs(t)))
            if truncation_should_stop(abs(t), scale * abs(running), h, config.rel_tol):
                active[sign] = False
        if not (active[1] or active[-1]):
            break
    else:
        raise NotConverged(
            f"no truncation after max_terms={config.max_terms} terms (h={h:g})",
            terms=(counts[1], counts[-1]),
        )
    re = math.fsum(t.real for t in terms)
    im = math.fsum(t.imag for t in terms)
    # h/(2 pi i) * (re + i im) = scale * (im - i re)
    sign = problem.contour.orientation
    return FpResult(
        value=sign * scale * im,
        n_pos=counts[1],
        n_neg=counts[-1],
        h=h,
        imag_residual=-sign * scale * re,
        term_trace=trace,
    )


def compute_symmetric(problem: FpProblem,
                      config: QuadratureConfig = QuadratureConfig()) -> FpResult:
    """Half sum for integrands real on the real axis.

    With a conjugate-symmetric contour and an odd transform the terms at
    ``-kh`` are minus the conjugates of those at ``+kh``, so only ``k >= 0``
    is evaluated.  The caller is responsible for the reflection property;
    it is spot-checked unless Python runs with ``-O``.
    """
    if __debug__:
        _debug_checks(problem, symmetric=True)
    h = config.h
    scale = h / (2 * math.pi)
    t0 = term(problem, 0.0)
    parts = [t0.imag]
    trace = [(0, abs(t0))] if config.keep_trace else None
    running = scale * t0.imag
    n_pos = 0
    for k in range(1, config.max_terms + 1):
        t = _term_or_not_converged(problem, k * h, (n_pos, 0))
        parts.append(2.0 * t.imag)
        running += 2.0 * scale * t.imag
        n_pos = k
        if trace is not None:
            trace.append((k, abs(t)))
        if truncation_should_stop(abs(t), abs(running), h, config.rel_tol):
            break
    else:
        raise NotConverged(
            f"no truncation after max_terms={config.max_terms} terms (h={h:g})",
            terms=(n_pos, 0),
        )
    value = problem.contour.orientation * scale * math.fsum(parts)
    return FpResult(value=value, n_pos=n_pos, n_neg=0, h=h, term_trace=trace)


def compute(problem: FpProblem, config: QuadratureConfig = QuadratureConfig(),
            mode: str = "symmetric") -> FpResult:
    """Dispatch on ``mode`` ("symmetric" or "full")."""
    if mode == "symmetric":
        return compute_symmetric(problem, config)
    if mode == "full":
        return compute_full(problem, config)
    raise ValueError(f"mode must be 'symmetric' or 'full', got {mode!r}")


def error_bound_terms(params: ErrorBoundParams, h: float, n_prime: int):
    """The discretization and truncation parts of :func:`error_bound`."""
    if not h > 0:
        raise ValueError(f"h must be positive, got {h!r}")
    if n_prime < 1:
        raise ValueError(f"n_prime must be >= 1, got {n_prime!r}")
    q = math.exp(-2 * math.pi * params.d / h)
    discretization = params.script_n / (2 * math.pi) * q / (1 - q)
    growth = params.c2 * n_prime * h
    if growth > 700.0:
        truncation = 0.0
    else:
        truncation = params.big_c * math.exp(-params.c1 * math.exp(growth))
    return discretization, truncation


def error_bound(params: ErrorBoundParams, h: float, n_prime: int) -> float:
    """A-priori bound on the quadrature error for mesh ``h`` and ``2 n' + 1`` points.

    The discretization term decays like ``exp(-2 pi d / h)``, the truncation
    term like ``exp(-c1 exp(c2 n' h))``.  Refining ``h`` at fixed ``n'``
    shrinks the window ``n' h`` and so raises the second term.
    """
    discretization, truncation = error_bound_terms(params, h, n_prime)
    return discretization + truncation
