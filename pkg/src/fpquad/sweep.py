"""Mesh-refinement sweeps and their CSV form."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, TextIO

from .contour import scaled_contour
from .engine import ZERO_THRESHOLD, FpProblem, QuadratureConfig, compute
from .exceptions import NotConverged
from .integrands import get_integrand
from .oracle import exact_value
from .transforms import DETransformKind

__all__ = [
    "DEFAULT_H_LIST",
    "SweepSpec",
    "SweepRow",
    "CSV_HEADER",
    "relative_error",
    "discrepancy",
    "run_sweep",
    "write_csv",
    "read_csv",
    "format_float",
    "sweep_to_string",
]

DEFAULT_H_LIST = tuple(2.0 ** -j for j in range(1, 7))
CSV_HEADER = ("h", "N_total", "value", "abs_error", "rel_error")


def format_float(x: float) -> str:
    return format(x, ".17g")


def relative_error(value: float, exact: float) -> float:
    """``|value - exact| / |exact|``, or ``|value|`` when the exact value is 0."""
    if exact == 0:
        return abs(value)
    return abs(value - exact) / abs(exact)


def discrepancy(a: float, b: float, reference: float) -> float:
    """Relative gap between ``a`` and ``b``, absolute if ``reference`` is zero."""
    gap = abs(a - b)
    if abs(reference) < ZERO_THRESHOLD:
        return gap
    return gap / abs(reference)


@dataclass(frozen=True)
class SweepSpec:
    integrand_name: str
    n: int
    h_list: Sequence[float] = DEFAULT_H_LIST
    transform: DETransformKind = DETransformKind.SINH_SINH
    contour_offset: float = 0.5
    mode: str = "symmetric"
    rel_tol: float = 1e-15
    max_terms: int = 10_000
    output_path: Optional[str] = None

    def __post_init__(self):
        hs = tuple(float(h) for h in self.h_list)
        if not hs:
            raise ValueError("h_list must be nonempty")
        if any(not (h > 0 and math.isfinite(h)) for h in hs):
            raise ValueError("every h must be positive and finite")
        object.__setattr__(self, "h_list", tuple(sorted(hs, reverse=True)))
        object.__setattr__(self, "transform", DETransformKind.coerce(self.transform))


@dataclass(frozen=True)
class SweepRow:
    h: float
    n_total: int
    value: float
    abs_error: float
    rel_error: float


def run_sweep(spec: SweepSpec) -> List[SweepRow]:
    """One row per mesh, coarsest first.

    A mesh that fails to converge yields a row of nans instead of aborting
    the sweep; ``n_total`` then counts the terms taken before giving up.
    """
    problem = FpProblem(
        get_integrand(spec.integrand_name),
        spec.n,
        contour=scaled_contour(spec.contour_offset),
        transform=spec.transform,
    )
    exact = exact_value(spec.integrand_name, spec.n)
    rows = []
    for h in spec.h_list:
        config = QuadratureConfig(h=h, rel_tol=spec.rel_tol, max_terms=spec.max_terms)
        try:
            result = compute(problem, config, mode=spec.mode)
        except NotConverged as exc:
            n_pos, n_neg = exc.terms
            rows.append(SweepRow(h, n_pos + n_neg + 1, math.nan, math.nan, math.nan))
            continue
        if exact is None:
            abs_err = rel_err = math.nan
        else:
            abs_err = abs(result.value - exact)
            rel_err = relative_error(result.value, exact)
        rows.append(SweepRow(h, result.n_total, result.value, abs_err, rel_err))
    return rows


def write_csv(rows: Iterable[SweepRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([
            format_float(r.h), str(r.n_total), format_float(r.value),
            format_float(r.abs_error), format_float(r.rel_error),
        ])


def read_csv(stream: TextIO) -> List[SweepRow]:
    reader = csv.reader(stream)
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    return [
        SweepRow(float(h), int(n), float(v), float(a), float(r))
        for h, n, v, a, r in reader
    ]


def sweep_to_string(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
