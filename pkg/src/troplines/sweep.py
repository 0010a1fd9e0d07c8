"""Exhaustive and randomized sweeps over integer point configurations.

Each configuration runs through the full analysis record (bound,
near-pencil implication, cross-oracles, tiling, regularity, count
identities, determined-face inequalities) and every violation is kept
with the configuration that produced it, so a failing sweep replays as a
standalone test case. Violations are data, not exceptions.

Sweeps shard across worker processes by index ranges over a precomputed
configuration list, so results are identical for any worker count and
fixed parameters (elapsed time aside).
"""

from __future__ import annotations

import itertools
import multiprocessing
import random
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from . import kernel
from .errors import BudgetExhausted, GridTooSmall, InvalidSweep, RangeTooSmall
from .incidence import PointConfig, point_config

IntPair = Tuple[int, int]

# the invariant suites a sweep can enable; analysis records tag each
# violation with one of these
ALL_CHECKS = frozenset(
    {
        "bound",
        "near_pencil",
        "cross_oracle",
        "count_identities",
        "tiling",
        "regularity",
        "cell_edges",
        "max_triangles",
        "determined_union",
        "determined_minimum",
        "unit_parallelogram",
    }
)


@dataclass(frozen=True)
class Exhaustive:
    """All n-subsets of the grid_size x grid_size lattice."""

    grid_size: int


@dataclass(frozen=True)
class Random:
    """samples independent draws of n distinct points from the box
    [-coord_range, coord_range]^2, reproducible from seed."""

    samples: int
    coord_range: int
    seed: int = 0


Mode = Union[Exhaustive, Random]


@dataclass(frozen=True)
class SweepParams:
    n: int
    mode: Mode
    checks: frozenset = ALL_CHECKS

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSweep(f"n must be at least 1, got {self.n}")
        unknown = set(self.checks) - ALL_CHECKS
        if unknown:
            raise InvalidSweep(f"unknown check suites: {sorted(unknown)}")
        if isinstance(self.mode, Exhaustive):
            if self.mode.grid_size < 2:
                raise InvalidSweep(
                    f"grid_size must be at least 2, got {self.mode.grid_size}"
                )
        elif isinstance(self.mode, Random):
            if self.mode.samples < 1:
                raise InvalidSweep(
                    f"samples must be at least 1, got {self.mode.samples}"
                )
            if self.mode.coord_range < 1:
                raise InvalidSweep(
                    f"coord_range must be at least 1, got {self.mode.coord_range}"
                )
            if (2 * self.mode.coord_range + 1) ** 2 < self.n:
                raise RangeTooSmall(
                    f"a box of side {2 * self.mode.coord_range + 1} holds fewer "
                    f"than {self.n} distinct points"
                )
        else:
            raise InvalidSweep(f"unknown mode {self.mode!r}")


@dataclass
class SweepReport:
    configs_tested: int
    violations: List[Tuple[Tuple[IntPair, ...], str, str]]
    histogram: Dict[int, int]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.violations


def enumerate_configs(n: int, grid_size: int) -> Iterator[PointConfig]:
    """All n-subsets of the grid_size x grid_size lattice, lexicographic."""
    if grid_size * grid_size < n:
        raise GridTooSmall(
            f"grid {grid_size}x{grid_size} has {grid_size * grid_size} points, "
            f"fewer than n={n}"
        )
    lattice = [(x, y) for x in range(grid_size) for y in range(grid_size)]
    for combo in itertools.combinations(lattice, n):
        yield point_config(combo)


def random_config(n: int, coord_range: int, rng: random.Random) -> PointConfig:
    """n distinct integer points from [-coord_range, coord_range]^2,
    uniform with rejection of repeats."""
    if (2 * coord_range + 1) ** 2 < n:
        raise RangeTooSmall(
            f"a box of side {2 * coord_range + 1} holds fewer than {n} "
            f"distinct points"
        )
    chosen: List[IntPair] = []
    seen = set()
    while len(chosen) < n:
        p = (rng.randint(-coord_range, coord_range),
             rng.randint(-coord_range, coord_range))
        if p in seen:
            continue
        seen.add(p)
        chosen.append(p)
    return point_config(chosen)


def _config_list(params: SweepParams) -> List[Tuple[IntPair, ...]]:
    """The sweep's configurations as plain tuples, in their fixed order."""
    if isinstance(params.mode, Exhaustive):
        return [
            tuple((p.x, p.y) for p in cfg.points)
            for cfg in enumerate_configs(params.n, params.mode.grid_size)
        ]
    rng = random.Random(params.mode.seed)
    out = []
    for _ in range(params.mode.samples):
        cfg = random_config(params.n, params.mode.coord_range, rng)
        out.append(tuple((p.x, p.y) for p in cfg.points))
    return out


def _analyze_chunk(args) -> List[Tuple[int, List[List[str]]]]:
    pairs_chunk, checks = args
    out = []
    for pairs in pairs_chunk:
        record = kernel.analyze(point_config(pairs))
        kept = [v for v in record["violations"] if v[0] in checks]
        out.append((record["excess"], kept))
    return out


def run_sweep(
    params: SweepParams,
    jobs: int = 1,
    sink: Optional[Callable[[int, Tuple[IntPair, ...], int, list], None]] = None,
) -> SweepReport:
    """Run the sweep and collect every violation with its configuration.

    jobs > 1 shards the configuration list across processes by index
    ranges; the merged report does not depend on the worker count. sink,
    when given, receives (index, config, excess, violations) for every
    configuration in order, after analysis.
    """
    start = time.perf_counter()
    configs = _config_list(params)
    checks = params.checks

    if jobs < 1:
        raise InvalidSweep(f"jobs must be at least 1, got {jobs}")
    if jobs == 1 or len(configs) < 2 * jobs:
        results = _analyze_chunk((configs, checks))
    else:
        chunk_size = (len(configs) + jobs - 1) // jobs
        chunks = [
            (configs[i : i + chunk_size], checks)
            for i in range(0, len(configs), chunk_size)
        ]
        with multiprocessing.Pool(processes=jobs) as pool:
            partials = pool.map(_analyze_chunk, chunks)
        results = [item for partial in partials for item in partial]

    histogram: Dict[int, int] = {}
    violations: List[Tuple[Tuple[IntPair, ...], str, str]] = []
    for index, (pairs, (excess, bad)) in enumerate(zip(configs, results)):
        histogram[excess] = histogram.get(excess, 0) + 1
        for suite, detail in bad:
            violations.append((pairs, suite, detail))
        if sink is not None:
            sink(index, pairs, excess, bad)

    elapsed = time.perf_counter() - start
    return SweepReport(
        configs_tested=len(configs),
        violations=violations,
        histogram=dict(sorted(histogram.items())),
        elapsed=elapsed,
    )


def sg_failure_search(
    n: int, params: SweepParams, stop_after: int = 1
) -> List[PointConfig]:
    """Configurations with no ordinary stable line (no stable line through
    exactly two of the points).

    Streams the configurations described by params and stops once
    stop_after witnesses are found. Exhausting the stream first issues a
    BudgetExhausted warning and returns whatever was found.
    """
    if n not in (4, 5):
        raise InvalidSweep(
            f"ordinary-line failures are searched at n = 4 or 5, got {n}"
        )
    if params.n != n:
        raise InvalidSweep(f"params.n = {params.n} does not match n = {n}")
    if isinstance(params.mode, Exhaustive):
        stream: Iterator[PointConfig] = enumerate_configs(n, params.mode.grid_size)
    else:
        rng = random.Random(params.mode.seed)
        stream = (
            random_config(n, params.mode.coord_range, rng)
            for _ in range(params.mode.samples)
        )
    witnesses: List[PointConfig] = []
    for cfg in stream:
        if not kernel.has_ordinary_line(cfg):
            witnesses.append(cfg)
            if len(witnesses) >= stop_after:
                return witnesses
    warnings.warn(
        BudgetExhausted(
            f"search ended with {len(witnesses)} of {stop_after} witnesses"
        )
    )
    return witnesses
