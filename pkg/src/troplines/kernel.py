"""Backend selection for per-configuration analysis.

Verification sweeps call analyze() here instead of the pure routine in
troplines.analysis. When the compiled extension built from
_fastsweep.pyx is importable and the configuration fits its limits
(integer coordinates, at most 16 points, magnitude at most 2**20) the
compiled kernel handles the call; anything else, and every call when the
environment variable TROPLINES_PURE is set to 1, goes to the pure-Python
implementation. Both produce the same analysis record, which the test
suite enforces by direct comparison.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .analysis import analyze_config
from .incidence import PointConfig, ordinary_stable_lines

COORD_LIMIT = 1 << 20
MAX_KERNEL_POINTS = 16


def _load_compiled():
    if os.environ.get("TROPLINES_PURE") == "1":
        return None
    try:
        from . import _fastsweep
    except ImportError:
        return None
    return _fastsweep


_COMPILED = _load_compiled()


def backend_name() -> str:
    """'compiled' when the extension is active, 'pure' otherwise."""
    return "pure" if _COMPILED is None else "compiled"


def _as_int_pairs(cfg: PointConfig):
    """The points as plain int tuples, or None if any coordinate is a
    non-integer rational or outside the kernel's bounds."""
    pairs = []
    for p in cfg.points:
        x, y = p.x, p.y
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return None
            x = int(x)
        if isinstance(y, Fraction):
            if y.denominator != 1:
                return None
            y = int(y)
        if not isinstance(x, int) or not isinstance(y, int):
            return None
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            return None
        pairs.append((x, y))
    return pairs


def kernel_eligible(cfg: PointConfig) -> bool:
    if _COMPILED is None or cfg.v > MAX_KERNEL_POINTS:
        return False
    return _as_int_pairs(cfg) is not None


def analyze(cfg: PointConfig) -> dict:
    """The analysis record for cfg, from whichever backend applies."""
    if _COMPILED is not None and cfg.v <= MAX_KERNEL_POINTS:
        pairs = _as_int_pairs(cfg)
        if pairs is not None:
            return _COMPILED.analyze_ints(pairs)
    return analyze_config(cfg)


def has_ordinary_line(cfg: PointConfig) -> bool:
    """True iff some stable line passes through exactly two points."""
    if _COMPILED is not None and 2 <= cfg.v <= MAX_KERNEL_POINTS:
        pairs = _as_int_pairs(cfg)
        if pairs is not None:
            return _COMPILED.has_ordinary_line(pairs)
    return len(ordinary_stable_lines(cfg)) > 0
