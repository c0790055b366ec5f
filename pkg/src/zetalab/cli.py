"""Command-line surface.

Exit codes: 0 when everything requested passed, 1 when any claim or scan
failed, 2 on usage errors.  Numeric output is printed with 17 significant
digits so values round-trip through text.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import analytic, arith, comb, laplace, verify


def _threads_default() -> int:
    env = os.environ.get("ZL_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetalab",
        description="Evaluate prime-counting functions, run identity claims, and scan bounds.",
    )
    p.add_argument("--threads", type=int, default=_threads_default(),
                   help="parallelism budget (default: ZL_THREADS or machine cores)")
    sub = p.add_subparsers(dest="command")

    ev = sub.add_parser("eval", help="evaluate one function at a point")
    ev.add_argument("function", choices=["pi", "j", "psi", "li", "lie", "zeta", "r", "rint"])
    ev.add_argument("argument", type=float)

    ck = sub.add_parser("check", help="run claims from the registry")
    ck.add_argument("claim", nargs="?", help="claim id, e.g. C9")
    ck.add_argument("--all", action="store_true", help="run the whole catalog")
    ck.add_argument("--max", type=float, default=None, help="range ceiling override")
    ck.add_argument("--s", default=None, help="comma-separated s grid override")
    ck.add_argument("--points", type=int, default=None)
    ck.add_argument("--format", choices=["csv", "json"], default=None)
    ck.add_argument("--out", default="-")

    sc = sub.add_parser("scan", help="scan one bound over a range")
    sc.add_argument("bound", help="bound id, e.g. B2")
    sc.add_argument("--from", dest="lo", type=float, default=None)
    sc.add_argument("--to", dest="hi", type=float, default=None)
    sc.add_argument("--mode", choices=["every-integer", "every-jump", "log-grid"], default=None)
    sc.add_argument("--points", type=int, default=10_000)
    sc.add_argument("--convention", choices=["li", "offset"], default=None)
    sc.add_argument("--format", choices=["csv", "json"], default=None)
    sc.add_argument("--out", default="-")

    lpp = sub.add_parser("laplace", help="bracket a transform pair on an s grid")
    lpp.add_argument("pair", help="pair id: " + ", ".join(laplace.PAIR_IDS))
    lpp.add_argument("--s", default="1.5,2,3,5,10")
    lpp.add_argument("--limit", type=float, default=verify.DEFAULT_COMB_LIMIT)
    lpp.add_argument("--x-max", type=float, default=None)
    return p


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _write_text(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_eval(args) -> int:
    x = args.argument
    fn = args.function
    if fn == "pi":
        print(arith.pi_count(x))
        return 0
    value = {
        "j": lambda: arith.j_value(x).value,
        "psi": lambda: arith.psi_value(x),
        "li": lambda: analytic.li_pv(x),
        "lie": lambda: analytic.lie(x),
        "zeta": lambda: analytic.zeta_real(x),
        "r": lambda: comb.r_value(x),
        "rint": lambda: comb.r_integral(x),
    }[fn]()
    print(_fmt(value))
    return 0


def _claim_params(args, claim_id: str) -> Optional[dict]:
    params = {}
    defaults = verify.CLAIMS[claim_id].defaults
    if args.max is not None:
        if "limit" in defaults:
            params["limit"] = int(args.max)
        elif "n_grid" in defaults:
            params["n_grid"] = [n for n in defaults["n_grid"] if n <= args.max]
        elif "x_hi" in defaults:
            params["x_hi"] = args.max
        elif "x_max" in defaults:
            params["x_max"] = int(args.max)
    if args.s is not None and "s_grid" in defaults:
        params["s_grid"] = [float(t) for t in args.s.split(",")]
    if args.points is not None and "points" in defaults:
        params["points"] = args.points
    return params or None


def _cmd_check(args) -> int:
    if not args.all and not args.claim:
        print("check needs a claim id or --all", file=sys.stderr)
        return 2
    ids = list(verify.CLAIMS) if args.all else [args.claim]
    for cid in ids:
        if cid not in verify.CLAIMS:
            print(f"unknown claim id {cid!r}", file=sys.stderr)
            return 2
    results = [verify.run_claim(cid, _claim_params(args, cid)) for cid in ids]
    for r in results:
        print(
            f"{r.id} {r.verdict} max_abs_residual={_fmt(r.max_abs_residual)} "
            f"tolerance={_fmt(r.tolerance)} at={_fmt(r.arg_extremum)}"
        )
    if args.format:
        verify.emit_report(results, args.format, args.out)
    return 0 if all(r.passed for r in results) else 1


def _cmd_scan(args) -> int:
    mode = args.mode.replace("-", "_") if args.mode else None
    sink_ctx = None
    try:
        if args.format == "csv":
            if args.out == "-":
                report = verify.scan_bound(
                    args.bound, args.lo, args.hi, mode,
                    points=args.points, convention=args.convention,
                    row_sink=sys.stdout, threads=args.threads,
                )
            else:
                with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                    report = verify.scan_bound(
                        args.bound, args.lo, args.hi, mode,
                        points=args.points, convention=args.convention,
                        row_sink=fh, threads=args.threads,
                    )
        else:
            report = verify.scan_bound(
                args.bound, args.lo, args.hi, mode,
                points=args.points, convention=args.convention, threads=args.threads,
            )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(
        f"{report.bound_id} {'pass' if report.passed else 'fail'} "
        f"rows={report.n_rows} failures={report.n_failures} "
        f"min_margin={_fmt(report.min_margin)} at={_fmt(report.argmin_x)}",
        file=sys.stderr if args.format == "csv" and args.out == "-" else sys.stdout,
    )
    if args.format == "json":
        _write_text(verify.render_json([report]), args.out)
    return 0 if report.passed else 1


def _cmd_laplace(args) -> int:
    grid = [float(t) for t in args.s.split(",")]
    ok = True
    for s in grid:
        br = laplace.laplace_pair(args.pair, s, limit=args.limit, x_max=args.x_max)
        contained = br.contains() if br.closed_form is not None else True
        ok &= contained
        closed = _fmt(br.closed_form) if br.closed_form is not None else "none"
        print(
            f"{br.pair_id} s={_fmt(s)} bracket=[{_fmt(br.numeric_lo)}, {_fmt(br.numeric_hi)}] "
            f"closed_form={closed} width={_fmt(br.width)} "
            f"{'contained' if contained else 'ESCAPED'}"
        )
    return 0 if ok else 1


def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command == "laplace":
            return _cmd_laplace(args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    parser.print_usage(sys.stderr)
    return 2


def main() -> None:
    sys.exit(dispatch())
