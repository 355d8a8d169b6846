"""Deterministic command-line front end.

Rows share the fixed column set {command, n, nu, value, abs_error, route}
preceded by a header record carrying the schema version; the nu column
holds the real parameter of the command (nu, m, or the Barnes argument z).
Floats are serialized with repr (shortest round-trip form, at most 17
significant digits), so identical inputs produce byte-identical output
and json-lines rows re-parse to the exact values.

Exit codes: 0 success, 1 selftest failure, 2 invalid arguments,
3 convergence/extrapolation failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from .context import DEFAULT_CONTEXT, ROUTE_CLOSED_FORM, PrecisionContext
from .errors import SpindetError
from .barnes import BarnesPoint, log_barnes_gamma
from .dimreg import dimreg_continuation
from .selftest import run_selftest
from .spectral import (SpectralConfig, anomaly_integrated, bar_schopka_scan,
                       boundary_log_det, dirac_det_log, f_coefficient)

SCHEMA_VERSION = 1
PRECISION_ENV = "SPINDET_PRECISION"
CORRUPT_ENV = "SPINDET_SELFTEST_CORRUPT"

_COLUMNS = ("command", "n", "nu", "value", "abs_error", "route")


def _parse_int_range(spec: str) -> list[int]:
    """'3' -> [3]; '1:8' -> [1..8] inclusive."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"invalid integer range {spec!r} (use N or LO:HI)")


def _parse_grid(spec: str) -> list[float]:
    """'0.5' -> [0.5]; 'start:stop:count' -> inclusive linear grid."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            if count < 1:
                raise ValueError
            if count == 1:
                return [start]
            step = (stop - start) / (count - 1)
            return [start + i * step for i in range(count)]
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"invalid grid {spec!r} (use X or START:STOP:COUNT)")


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return "" if x is None else str(x)


def _emit_pretty_row(out, command, n, nu, value, abs_error, route):
    err = "" if abs_error is None else f"{abs_error:.3e}"
    print(f"{command:<10}{_fmt(n):>4}  {_fmt(nu):<22}{_fmt(value):<26}"
          f"{err:<13}{route}", file=out)


def _make_context(args) -> PrecisionContext:
    target = getattr(args, "precision", None)
    if target is None:
        env = os.environ.get(PRECISION_ENV)
        target = float(env) if env else None
    if target is None:
        return DEFAULT_CONTEXT
    return PrecisionContext(target_rel_error=target)


def _rows_barnes(args, ctx):
    for n in args.n:
        for z in args.z:
            BarnesPoint(n, z)  # validate before evaluation
            value = log_barnes_gamma(BarnesPoint(n, z), ctx)
            yield ("barnes", n, z, value,
                   abs(value) * n * ctx.target_rel_error, ROUTE_CLOSED_FORM)


def _rows_det(args, ctx):
    for n in args.n:
        if args.nu is None:
            res = dirac_det_log(n, ctx)
            det = math.exp(-res.value)
            yield ("det", n, None, det, det * res.abs_error_estimate,
                   res.route)
        else:
            for nu in args.nu:
                res = boundary_log_det(SpectralConfig(n, nu), ctx)
                yield ("det", n, nu, res.value, res.abs_error_estimate,
                       res.route)


def _parity_filter(ns: list[int], keep_odd: bool) -> list[int]:
    # ranges keep only the valid parity; a single explicit value must be valid
    if len(ns) > 1:
        kept = [n for n in ns if n % 2 == (1 if keep_odd else 0)]
        if not kept:
            raise ValueError("range contains no n of the required parity")
        return kept
    return ns


def _rows_anomaly(args, ctx):
    for n in _parity_filter(args.n, keep_odd=False):
        for nu in args.nu:
            res = anomaly_integrated(n, nu, ctx)
            yield ("anomaly", n, nu, res.value, res.abs_error_estimate,
                   res.route)


def _rows_fcoef(args, ctx):
    for n in _parity_filter(args.n, keep_odd=True):
        res = f_coefficient(n, ctx)
        yield ("fcoef", n, None, res.value, res.abs_error_estimate, res.route)


def _rows_dimreg(args, ctx):
    for n in args.n:
        for nu in args.nu:
            rep = dimreg_continuation(n, nu, ctx)
            if n % 2 == 0:
                yield ("dimreg", n, nu, rep.residue, rep.residue_error,
                       "mode-sum-continuation")
            else:
                yield ("dimreg", n, nu, rep.finite_part,
                       rep.finite_part_error, "mode-sum-continuation")


def _rows_scan(args, ctx):
    scan = bar_schopka_scan(args.n_max, ctx)
    for e in scan.entries:
        yield ("scan", e.n, None, e.det_value,
               e.det_value * e.abs_error, ROUTE_CLOSED_FORM)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spindet",
        description="Barnes multiple gamma and sphere spectral determinants")
    parser.add_argument("--precision", type=float, default=None,
                        help="target relative error, in (0, 1e-6] "
                             f"(default 1e-12; env {PRECISION_ENV})")
    parser.add_argument("--format", choices=("csv", "json-lines", "pretty"),
                        default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("barnes", help="log Gamma_n(z)")
    p.add_argument("--n", type=_parse_int_range, required=True)
    p.add_argument("--z", type=_parse_grid, required=True)
    p.set_defaults(rows=_rows_barnes)

    p = sub.add_parser("det", help="det D^2(S^n), or boundary log-det "
                                   "of the two-point kernel when --nu given")
    p.add_argument("--n", type=_parse_int_range, required=True)
    p.add_argument("--nu", type=_parse_grid, default=None)
    p.set_defaults(rows=_rows_det)

    p = sub.add_parser("anomaly", help="integrated conformal anomaly (even n)")
    p.add_argument("--n", type=_parse_int_range, required=True)
    p.add_argument("--nu", type=_parse_grid, required=True)
    p.set_defaults(rows=_rows_anomaly)

    p = sub.add_parser("fcoef", help="sphere free energy F (odd n)")
    p.add_argument("--n", type=_parse_int_range, required=True)
    p.set_defaults(rows=_rows_fcoef)

    p = sub.add_parser("dimreg", help="dimensional continuation report")
    p.add_argument("--n", type=_parse_int_range, required=True)
    p.add_argument("--nu", type=_parse_grid, required=True)
    p.set_defaults(rows=_rows_dimreg)

    p = sub.add_parser("scan", help="Bar-Schopka determinant scan")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(rows=_rows_scan)

    sub.add_parser("selftest", help="run the invariant suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _make_context(args)
    except ValueError as e:
        parser.error(str(e))  # exits 2

    if args.command == "selftest":
        corrupt = os.environ.get(CORRUPT_ENV, "") == "bernoulli"
        results = run_selftest(ctx, corrupt_bernoulli=corrupt,
                               report=lambda line: print(line))
        bad = [r for r in results if not r.ok]
        if bad:
            print(f"selftest: FAILED at {bad[0].name}")
            return 1
        print(f"selftest: all {len(results)} invariants pass")
        return 0

    out = sys.stdout
    try:
        rows = list(args.rows(args, ctx))
    except SpindetError as e:
        print(f"error in {args.command} "
              f"({', '.join(f'{k}={v}' for k, v in sorted(vars(args).items()) if k in ('n', 'nu', 'z', 'n_max'))}): {e}",
              file=sys.stderr)
        return 3
    except ValueError as e:
        parser.error(str(e))

    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_COLUMNS)
        writer.writerow(["header", "", "", "", "", f"schema={SCHEMA_VERSION}"])
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
    elif args.format == "json-lines":
        print(json.dumps({"command": "header", "n": None, "nu": None,
                          "value": None, "abs_error": None,
                          "route": f"schema={SCHEMA_VERSION}"}), file=out)
        for command, n, nu, value, abs_error, route in rows:
            print(json.dumps({"command": command, "n": n, "nu": nu,
                              "value": value, "abs_error": abs_error,
                              "route": route}), file=out)
    else:
        print(f"{'command':<10}{'n':>4}  {'nu':<22}{'value':<26}"
              f"{'abs_error':<13}route", file=out)
        _emit_pretty_row(out, "header", None, None, None, None,
                         f"schema={SCHEMA_VERSION}")
        for command, n, nu, value, abs_error, route in rows:
            _emit_pretty_row(out, command, n, nu, value, abs_error, route)
    return 0


if __name__ == "__main__":
    sys.exit(main())
