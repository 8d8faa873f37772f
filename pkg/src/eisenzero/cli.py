"""Command-line front end: evaluation, zero scanning, a* computation,
trajectories, and the verification battery.

Exit codes: 0 success, 1 failed verification, 2 usage, 3 domain/pole
errors, 4 scan errors, 5 convention mismatch.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .backend import backend_name
from .cache import append_new_entries, load_cache
from .constant_term import phi, scatter
from .errors import (
    AmbiguousBracket,
    BoundaryNearZero,
    ConventionMismatch,
    DomainError,
    LadderMismatch,
    PhaseStepExceeded,
    PoleError,
    StepTooCoarse,
)
from .fields import field_from_label
from .spectral import astar_center_root, astar_kronecker, astar_spectral, rho_track
from .verify import run_suite
from .zerofind import ScanConfig, ZeroRecord, certify_simple, find_real_zero, scan_line
from .zeta import completed_zeta, set_memo, xi_field

SCAN_ERRORS = (StepTooCoarse, BoundaryNearZero, PhaseStepExceeded, AmbiguousBracket,
               LadderMismatch)


def _format_complex(v: complex) -> str:
    if v.imag == 0.0:
        return f"{v.real:.15g}"
    return f"({v.real:.15g}{v.imag:+.15g}j)"


def _parse_s(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"--s expects 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


# ---------------------------------------------------------------------------
# eval


def cmd_eval(args) -> int:
    field = field_from_label(args.field)
    s = _parse_s(args.s)
    if args.fn == "lambda":
        v = completed_zeta(field, s)
    elif args.fn == "xi":
        v = xi_field(field, s)
    elif args.fn == "phi":
        v = phi(field, args.a, s)
    else:
        v = scatter(field, s)
    print(_format_complex(complex(v)))
    return 0


# ---------------------------------------------------------------------------
# zeros


def _scan_chunk(params) -> list[ZeroRecord]:
    label, a, t_min, t_max, step, tol = params
    field = field_from_label(label)
    cfg = ScanConfig(t_min=t_min, t_max=t_max, step=step, refine_tol=tol)
    return scan_line(field, a, cfg)


def _record_lines(records: list[ZeroRecord], fmt: str) -> list[str]:
    if fmt == "csv":
        header = "field,a,kind,re,im,residual,simple,mu,method"
        rows = [header]
        for r in records:
            d = r.to_json_dict()
            rows.append(",".join([
                d["field"], repr(d["a"]), d["kind"], repr(d["re"]), repr(d["im"]),
                repr(d["residual"]), "true" if d["simple"] else "false",
                repr(d["mu"]), d["method"],
            ]))
        return rows
    return [json.dumps(r.to_json_dict()) for r in records]


def cmd_zeros(args) -> int:
    field = field_from_label(args.field)
    cfg = ScanConfig(t_min=args.tmin, t_max=args.tmax, step=args.step,
                     refine_tol=args.tol)
    memo = known = None
    if args.cache:
        memo, known = load_cache()
        set_memo(memo)
    try:
        if args.jobs > 1 and args.tmax > args.tmin:
            n_grid = max(1, int((args.tmax - args.tmin) / args.step))
            per = max(1, -(-n_grid // args.jobs))
            edges = [args.tmin + k * per * args.step for k in range(args.jobs)]
            edges = [e for e in edges if e < args.tmax] + [args.tmax]
            params = [(field.label, args.a, lo, hi, args.step, args.tol)
                      for lo, hi in zip(edges, edges[1:])]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                chunks = list(pool.map(_scan_chunk, params))
            records = [r for chunk in chunks for r in chunk]
            records.sort(key=lambda r: (r.im, r.re))
            for r1, r2 in zip(records, records[1:]):
                if r2.im - r1.im < 2.0 * args.step:
                    raise StepTooCoarse(
                        f"zeros at t={r1.im:.6f}, {r2.im:.6f} within 2*step"
                    )
        else:
            records = scan_line(field, args.a, cfg)
        real = find_real_zero(field, args.a, cfg)
        if real is not None:
            records.append(real)
        for rec in records:
            certify_simple(rec, cfg)
        records.sort(key=lambda r: (r.im, r.re))
        lines = _record_lines(records, args.format)
    finally:
        if memo is not None:
            set_memo(None)
            append_new_entries(memo, known)
    for line in lines:
        print(line)
    return 0


# ---------------------------------------------------------------------------
# astar


def cmd_astar(args) -> int:
    field = field_from_label(args.field)
    if args.method == "kronecker" and field.is_rational:
        print("error: the Kronecker route needs an imaginary quadratic field",
              file=sys.stderr)
        return 2
    routes = []
    if args.method in ("spectral", "all"):
        routes.append(astar_spectral(field))
    if args.method in ("root", "all"):
        routes.append(astar_center_root(field))
    if args.method in ("kronecker", "all") and not field.is_rational:
        routes.append(astar_kronecker(field))
    for r in routes:
        print(f"{r.method:22s} {r.value:.12g}  (accuracy ~ {r.accuracy_estimate:.2g})")
    if len(routes) > 1:
        for i in range(len(routes)):
            for j in range(i + 1, len(routes)):
                d = abs(routes[i].value - routes[j].value)
                print(f"|{routes[i].method} - {routes[j].method}| = {d:.3g}")
    return 0


# ---------------------------------------------------------------------------
# traject


def cmd_traject(args) -> int:
    field = field_from_label(args.field)
    grid = sorted(float(x) for x in args.agrid.split(","))
    traj = rho_track(field, grid, t_max=args.tmax)
    if args.format == "csv":
        print("a,kind,index,value")
        for a, rho, lad in zip(traj.a_grid, traj.rho, traj.t_ladder):
            if rho is not None:
                print(f"{a!r},rho,0,{rho!r}")
            for j, t in enumerate(lad):
                print(f"{a!r},line,{j},{t!r}")
    else:
        for a, rho, lad in zip(traj.a_grid, traj.rho, traj.t_ladder):
            print(json.dumps({"a": a, "rho": rho, "ladder": lad}))
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    report = run_suite(args.suite)
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        print(f"{mark} {c.id}: measured={c.measured} expected={c.expected} "
              f"tolerance={c.tolerance}")
    print(f"{'OK' if report.passed else 'FAILED'} "
          f"({len(report.checks) - report.n_failed}/{len(report.checks)} checks)")
    if args.out:
        meta = {
            "version": __version__,
            "backend": backend_name(),
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(meta=meta), fh, indent=2)
            fh.write("\n")
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenzero",
        description="Completed zeta functions, Eisenstein constant terms, and "
                    "certified critical-line zero localization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate lambda/xi/phi/c at a point")
    p.add_argument("--field", required=True, help="Q or D in {1,2,3,7,11,19,43,67,163}")
    p.add_argument("--fn", required=True, choices=["lambda", "xi", "phi", "c"])
    p.add_argument("--a", type=float, default=1.0, help="truncation height (phi only)")
    p.add_argument("--s", required=True, help="complex point as re,im")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("zeros", help="scan, refine and certify zeros")
    p.add_argument("--field", required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--tmin", type=float, default=0.5)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=1e-11)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--cache", action="store_true",
                   help="use the flat-file evaluation cache (EISENZERO_CACHE_DIR)")
    p.set_defaults(handler=cmd_zeros)

    p = sub.add_parser("astar", help="critical constant a* by independent routes")
    p.add_argument("--field", required=True)
    p.add_argument("--method", choices=["spectral", "root", "kronecker", "all"],
                   default="all")
    p.set_defaults(handler=cmd_astar)

    p = sub.add_parser("traject", help="real-zero trajectory over a height grid")
    p.add_argument("--field", required=True)
    p.add_argument("--agrid", required=True, help="comma-separated heights")
    p.add_argument("--tmax", type=float, default=None,
                   help="also report line-zero ladders up to this height")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(handler=cmd_traject)

    p = sub.add_parser("verify", help="run the acceptance battery")
    p.add_argument("--suite", choices=["core", "full"], default="core")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (PoleError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SCAN_ERRORS as exc:
        print(f"scan error: {exc}", file=sys.stderr)
        return 4
    except ConventionMismatch as exc:
        print(f"convention mismatch: {exc} "
              f"(selected={exc.selected}, other={exc.other})", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
