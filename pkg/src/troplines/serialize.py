"""JSON input parsing and report building.

Input files hold either {"lines": [{"vertex": [r, r]}, ...]} or
{"points": [[r, r], ...]} where each r is an integer or a "p/q" string.
Parse errors raise InputFormatError with a message naming the offending
field, which the CLI maps to exit code 2.

Report builders return plain JSON-ready structures; rationals serialize
back to the same integer-or-"p/q" convention.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .arrangement import (
    argmax_str,
    arrangement_vertices,
    build_arrangement,
    classify_cell,
    counts_from_classes,
    type_tuple,
)
from .errors import InputFormatError
from .incidence import PointConfig, dbe_check, dualize_points, point_config
from .lines import Point2, line_from_vertex
from .rationals import Rational
from .subdivision import DualSubdivision, dual_subdivision, is_near_pencil


def parse_rational(value: Any, where: str) -> Rational:
    """An integer or "p/q" string, exactly."""
    if isinstance(value, bool):
        raise InputFormatError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        parts = value.split("/")
        if len(parts) != 2:
            raise InputFormatError(
                f'{where}: rational strings look like "p/q", got {value!r}'
            )
        try:
            num, den = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(
                f'{where}: rational strings look like "p/q" with integer '
                f"parts, got {value!r}"
            ) from None
        if den == 0:
            raise InputFormatError(f"{where}: zero denominator in {value!r}")
        frac = Fraction(num, den)
        return int(frac) if frac.denominator == 1 else frac
    if isinstance(value, float):
        raise InputFormatError(
            f"{where}: floats are not exact; write an integer or a "
            f'"p/q" string instead of {value!r}'
        )
    raise InputFormatError(f"{where}: expected a number, got {type(value).__name__}")


def rational_to_json(r: Rational) -> Any:
    if isinstance(r, Fraction):
        if r.denominator == 1:
            return int(r)
        return f"{r.numerator}/{r.denominator}"
    return r


def point_to_json(p: Point2) -> List[Any]:
    return [rational_to_json(p.x), rational_to_json(p.y)]


def _parse_pair(value: Any, where: str) -> Tuple[Rational, Rational]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise InputFormatError(f"{where}: expected a pair [x, y]")
    return (
        parse_rational(value[0], f"{where}[0]"),
        parse_rational(value[1], f"{where}[1]"),
    )


def parse_input(data: Any) -> Tuple[str, Any]:
    """('lines', Arrangement) or ('points', PointConfig) from decoded JSON.

    The top-level object must carry exactly one of the keys "lines" and
    "points"; which one decides how the file is read.
    """
    if not isinstance(data, dict):
        raise InputFormatError("top level: expected an object")
    keys = [k for k in ("lines", "points") if k in data]
    if len(keys) != 1:
        raise InputFormatError(
            'top level: expected exactly one of the keys "lines" and "points"'
        )
    kind = keys[0]
    entries = data[kind]
    if not isinstance(entries, list) or not entries:
        raise InputFormatError(f"{kind}: expected a non-empty list")
    if kind == "lines":
        lines = []
        for i, entry in enumerate(entries):
            if not isinstance(entry, dict) or "vertex" not in entry:
                raise InputFormatError(
                    f'lines[{i}]: expected an object with a "vertex" field'
                )
            x, y = _parse_pair(entry["vertex"], f"lines[{i}].vertex")
            lines.append(line_from_vertex(Point2(x, y)))
        return "lines", build_arrangement(lines)
    pts = [_parse_pair(entry, f"points[{i}]") for i, entry in enumerate(entries)]
    return "points", point_config(pts)


def load_input(path: str) -> Tuple[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if not text.strip():
        raise InputFormatError(f"{path}: empty input file")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON ({exc})") from None
    return parse_input(data)


def subdivision_to_json(sub: DualSubdivision) -> dict:
    return {
        "n": sub.n,
        "cells": [
            {
                "dual_point": point_to_json(Point2(*cell.dual_point)),
                "class": cell.cell_class.value,
                "vertices": [[int(x), int(y)] for x, y in cell.vertices],
            }
            for cell in sub.cells
        ],
        "lift": [
            [pt[0], pt[1], rational_to_json(value)]
            for pt, value in sorted(sub.lift.items())
        ],
    }


def analyze_report(kind: str, obj: Any) -> dict:
    """The full analysis report for cmd_analyze, JSON-ready.

    For points input the report covers the dual arrangement and adds the
    incidence verdict when the configuration has at least 4 points.
    """
    if kind == "points":
        cfg: PointConfig = obj
        arr = dualize_points(cfg)
    else:
        cfg = None
        arr = obj

    vertex_data = arrangement_vertices(arr)
    classes = [classify_cell(vd) for vd in vertex_data]
    cnt = counts_from_classes(arr.n, classes)
    sub = dual_subdivision(arr, vertex_data)

    report: Dict[str, Any] = {
        "input": kind,
        "counts": {
            "n": cnt.n,
            "t": cnt.t,
            "triangles": cnt.triangles,
            "b": cnt.b,
            "k": cnt.k,
            "h": cnt.h,
        },
        "vertices": [
            {
                "point": point_to_json(vd.point),
                "type": [argmax_str(s) for s in type_tuple(arr, vd.point)],
                "class": cls.value,
                "c": vd.c,
                "s_a": vd.s_a,
                "s_b": vd.s_b,
                "s_c": vd.s_c,
            }
            for vd, cls in zip(vertex_data, classes)
        ],
        "near_pencil": is_near_pencil(sub),
        "subdivision": subdivision_to_json(sub),
    }
    if kind == "points":
        report["points"] = [point_to_json(p) for p in cfg.points]
        if cfg.v >= 4:
            verdict = dbe_check(cfg)
            report["dbe"] = {
                "v": verdict.v,
                "b": verdict.b,
                "bound_holds": verdict.bound_holds,
                "equality": verdict.equality,
                "near_pencil": verdict.near_pencil,
                "consistent": verdict.consistent,
            }
        else:
            report["dbe"] = None
    return report


def sweep_line_json(index: int, config: tuple, excess: int, violations: list) -> str:
    """One JSONL line of a sweep stream: deterministic, no timing."""
    return json.dumps(
        {
            "index": index,
            "config": [[x, y] for x, y in config],
            "excess": excess,
            "violations": [[suite, detail] for suite, detail in violations],
        },
        separators=(",", ":"),
        sort_keys=True,
    )
