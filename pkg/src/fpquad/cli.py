"""Command-line front end.

Exit codes: 0 success, 1 numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .contour import scaled_contour
from .engine import FpProblem, QuadratureConfig, compute
from .exceptions import FpQuadError, NotConverged, OracleUnstable
from .integrands import BUILTIN_INTEGRANDS, get_integrand
from .oracle import exact_value, fp_oracle
from .sweep import (
    DEFAULT_H_LIST, SweepSpec, discrepancy, format_float, relative_error, run_sweep, write_csv,
)
from .transforms import DETransformKind

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2
ORACLE_TOL = 1e-5


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("integrand", choices=sorted(BUILTIN_INTEGRANDS))
    p.add_argument("--n", type=int, default=1, help="order of the singularity x^-n")
    p.add_argument("--transform", choices=[k.value for k in DETransformKind],
                   default=DETransformKind.SINH_SINH.value)
    p.add_argument("--contour-offset", type=float, default=0.5,
                   help="offset a in (0, 1) of the builtin contour")
    p.add_argument("--mode", choices=["symmetric", "full"], default="symmetric")
    p.add_argument("--tol", type=float, default=1e-15, help="relative truncation tolerance")
    p.add_argument("--max-terms", type=int, default=10_000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpquad",
        description="Hadamard finite-part integrals of x^-n f(x) over (0, inf).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one finite-part integral")
    _common(p)
    p.add_argument("--h", type=float, default=2.0 ** -4, help="trapezoidal mesh")

    p = sub.add_parser("sweep", help="errors over a list of meshes, as CSV")
    _common(p)
    p.add_argument("--h", type=float, nargs="*", default=list(DEFAULT_H_LIST),
                   help="meshes (default 2^-1 ... 2^-6)")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")

    p = sub.add_parser("oracle-check", help="compare the engine with the epsilon-limit oracle")
    _common(p)
    p.add_argument("--h", type=float, default=2.0 ** -4)
    return parser


def _problem(args) -> FpProblem:
    return FpProblem(
        get_integrand(args.integrand),
        args.n,
        contour=scaled_contour(args.contour_offset),
        transform=args.transform,
    )


def _config(args) -> QuadratureConfig:
    return QuadratureConfig(h=args.h, rel_tol=args.tol, max_terms=args.max_terms)


def _fields(**kw) -> str:
    out = []
    for key, val in kw.items():
        out.append(f"{key}={format_float(val) if isinstance(val, float) else val}")
    return " ".join(out)


def cmd_compute(args) -> int:
    result = compute(_problem(args), _config(args), mode=args.mode)
    info = dict(integrand=args.integrand, n=args.n, mode=args.mode, h=args.h,
                value=result.value, n_pos=result.n_pos, n_neg=result.n_neg,
                n_total=result.n_total)
    if args.mode == "full":
        info["imag_residual"] = result.imag_residual
    exact = exact_value(args.integrand, args.n)
    if exact is not None:
        info["exact"] = exact
        info["abs_error"] = abs(result.value - exact)
        info["rel_error"] = relative_error(result.value, exact)
    print(_fields(**info))
    return EXIT_OK


def cmd_sweep(args, parser) -> int:
    if not args.h:
        parser.error("sweep needs at least one --h value")
    spec = SweepSpec(args.integrand, args.n, h_list=args.h, transform=args.transform,
                     contour_offset=args.contour_offset, mode=args.mode,
                     rel_tol=args.tol, max_terms=args.max_terms, output_path=args.out)
    rows = run_sweep(spec)
    if spec.output_path is None:
        write_csv(rows, sys.stdout)
    else:
        with open(spec.output_path, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    problem = _problem(args)
    engine = compute(problem, _config(args), mode=args.mode).value
    oracle = fp_oracle(problem.integrand, args.n)
    exact = exact_value(args.integrand, args.n)
    gap = discrepancy(engine, oracle, engine if exact is None else exact)
    ok = gap <= ORACLE_TOL
    print(_fields(integrand=args.integrand, n=args.n, engine=engine, oracle=oracle,
                  discrepancy=gap, tol=ORACLE_TOL, status="ok" if ok else "mismatch"))
    return EXIT_OK if ok else EXIT_NUMERIC


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "sweep":
            return cmd_sweep(args, parser)
        return cmd_oracle_check(args)
    except (NotConverged, OracleUnstable) as exc:
        print(f"fpquad: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"fpquad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FpQuadError, OSError) as exc:
        print(f"fpquad: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
