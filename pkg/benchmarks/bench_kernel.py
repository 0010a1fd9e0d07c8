"""Timing comparison: compiled analysis kernel against the pure fallback.

Both backends run the same workload in one process. The pure side is the
reference implementation in troplines.analysis; the compiled side goes
through troplines.kernel, which must be active for the comparison (run
without TROPLINES_PURE).

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""

import argparse
import random
import sys
import time

from troplines.analysis import analyze_config
from troplines.incidence import point_config
from troplines.kernel import analyze, backend_name
from troplines.sweep import enumerate_configs


def build_workload():
    configs = list(enumerate_configs(4, 4))
    rng = random.Random(77)
    for _ in range(300):
        pts = set()
        while len(pts) < 6:
            pts.add((rng.randint(-20, 20), rng.randint(-20, 20)))
        configs.append(point_config(sorted(pts)))
    return configs


def timed(fn, configs, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        for cfg in configs:
            fn(cfg)
        runs.append(time.perf_counter() - start)
    return min(runs)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best run wins")
    args = parser.parse_args()

    if backend_name() != "compiled":
        print("compiled backend not active; build the extension and unset "
              "TROPLINES_PURE first", file=sys.stderr)
        return 1

    configs = build_workload()
    print(f"workload: {len(configs)} configurations "
          f"(1820 on the 4x4 grid, 300 random six-point)")

    sample = configs[:: len(configs) // 50]
    mismatches = sum(1 for cfg in sample if analyze(cfg) != analyze_config(cfg))
    print(f"agreement spot check: {len(sample) - mismatches}/{len(sample)}")
    if mismatches:
        return 1

    fast = timed(analyze, configs, args.repeat)
    pure = timed(analyze_config, configs, args.repeat)
    n = len(configs)
    print(f"compiled: {fast:8.3f} s total  {1e6 * fast / n:9.1f} us/config")
    print(f"pure:     {pure:8.3f} s total  {1e6 * pure / n:9.1f} us/config")
    print(f"speedup:  {pure / fast:8.1f} x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
