"""Command-line front end.

Subcommands: analyze (full report for a lines or points file), render
(side-by-side SVG of arrangement and dual subdivision), verify (sweeps
over integer configurations, JSONL stream plus summary), stable-line
(the stable tropical line through two points).

Exit codes: 0 success or sweep verified, 1 a mathematical invariant was
violated (the counterexample is printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import kernel
from .errors import InputFormatError, TilingFailure, TroplinesError
from .incidence import dualize_points, stable_line_two_points
from .lines import Point2
from .rationals import Rational
from .semiring import TropMatrix2x3, cramer_stable_solution
from .serialize import (
    analyze_report,
    load_input,
    parse_rational,
    rational_to_json,
    sweep_line_json,
)
from .svg import render_svg
from .sweep import Exhaustive, Random, SweepParams, run_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troplines",
        description="Exact computation with tropical line arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report for a lines or points file")
    p_an.add_argument("input", help='JSON file with "lines" or "points"')
    p_an.add_argument("--out", help="write the report here instead of stdout")

    p_re = sub.add_parser("render", help="arrangement and subdivision as one SVG")
    p_re.add_argument("input", help='JSON file with "lines" or "points"')
    p_re.add_argument("--svg", required=True, help="output SVG path")

    p_ve = sub.add_parser("verify", help="sweep configurations and check invariants")
    p_ve.add_argument("--n", type=int, required=True, help="points per configuration")
    p_ve.add_argument("--mode", choices=("exhaustive", "random"), required=True)
    p_ve.add_argument("--grid", type=int, help="lattice side for exhaustive mode")
    p_ve.add_argument("--samples", type=int, help="draws for random mode")
    p_ve.add_argument("--range", type=int, dest="coord_range",
                      help="coordinate box half-width for random mode")
    p_ve.add_argument("--seed", type=int, default=0, help="random mode seed")
    p_ve.add_argument("--jobs", type=int, default=None,
                      help="worker processes (default: TROPLINES_JOBS or 1)")
    p_ve.add_argument("--jsonl", help="write one result line per configuration here")

    p_sl = sub.add_parser("stable-line", help="stable line through two points")
    p_sl.add_argument("--p1", required=True, help="first point, e.g. -3,2 or 1/2,0")
    p_sl.add_argument("--p2", required=True, help="second point")

    return parser


def _parse_cli_point(text: str, flag: str) -> Point2:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputFormatError(f"{flag}: expected x,y, got {text!r}")
    x = parse_rational(_maybe_int(parts[0]), f"{flag} x")
    y = parse_rational(_maybe_int(parts[1]), f"{flag} y")
    return Point2(x, y)


def _maybe_int(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return text


def _fmt_rational(r: Rational) -> str:
    return str(rational_to_json(r))


def cmd_analyze(args) -> int:
    kind, obj = load_input(args.input)
    report = analyze_report(kind, obj)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(args) -> int:
    kind, obj = load_input(args.input)
    arr = dualize_points(obj) if kind == "points" else obj
    doc = render_svg(arr)
    try:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(doc)
    except OSError as exc:
        print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    if args.mode == "exhaustive":
        if args.grid is None:
            print("error: --mode exhaustive needs --grid", file=sys.stderr)
            return 2
        mode = Exhaustive(grid_size=args.grid)
    else:
        if args.samples is None or args.coord_range is None:
            print("error: --mode random needs --samples and --range", file=sys.stderr)
            return 2
        mode = Random(samples=args.samples, coord_range=args.coord_range,
                      seed=args.seed)
    params = SweepParams(n=args.n, mode=mode)

    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("TROPLINES_JOBS", "1"))

    stream = open(args.jsonl, "w", encoding="utf-8") if args.jsonl else None
    try:
        sink = None
        if stream is not None:
            def sink(index, config, excess, violations):
                stream.write(sweep_line_json(index, config, excess, violations))
                stream.write("\n")
        report = run_sweep(params, jobs=jobs, sink=sink)
    finally:
        if stream is not None:
            stream.close()

    summary = {
        "configs_tested": report.configs_tested,
        "violations": len(report.violations),
        "histogram": {str(k): v for k, v in report.histogram.items()},
        "elapsed": report.elapsed,
        "backend": kernel.backend_name(),
    }
    print(json.dumps(summary, indent=2))
    if report.violations:
        config, suite, detail = report.violations[0]
        print(
            f"counterexample: points {list(config)} failed {suite}: {detail}",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_stable_line(args) -> int:
    p1 = _parse_cli_point(args.p1, "--p1")
    p2 = _parse_cli_point(args.p2, "--p2")
    line = stable_line_two_points(p1, p2)
    o1, o2, o3 = cramer_stable_solution(
        TropMatrix2x3((p1.x, p1.y, 0), (p2.x, p2.y, 0))
    )
    coeffs = " : ".join(_fmt_rational(o) for o in (o1, o2, o3))
    vx, vy = line.vertex
    print(f"coefficients ({coeffs}), vertex ({_fmt_rational(vx)}, {_fmt_rational(vy)})")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # let point flags accept values that start with a minus sign
    merged: List[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in ("--p1", "--p2") and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            merged.append(token)

    parser = _build_parser()
    args = parser.parse_args(merged)
    handlers = {
        "analyze": cmd_analyze,
        "render": cmd_render,
        "verify": cmd_verify,
        "stable-line": cmd_stable_line,
    }
    try:
        return handlers[args.command](args)
    except TilingFailure as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (InputFormatError, TroplinesError) as exc:
        if getattr(exc, "index", None) is not None:
            print(f"error: duplicate point at index {exc.index}: {exc}",
                  file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
