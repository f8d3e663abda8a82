"""Compare the compiled and pure-Python gluing census kernels.

    python benchmarks/bench_wick.py [--repeat 3] [--max-weight 12]

Each row times a full census (all first-partner chunks) for one partition and
checks that both kernels return the same histograms.
"""

from __future__ import annotations

import argparse
import sys
import time

from hermkp import _kernel
from hermkp.partitions import Partition

CASES = ["2,2,2", "6", "4,4", "3,3,2", "8,2", "4,3,3", "2,2,2,2,2,2", "12", "6,6", "14"]


def full_census(chunk, parts):
    size = sum(parts)
    hist, conn = {}, {}
    for partner in range(1, size):
        h, c = chunk(parts, partner)
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        for k, v in c.items():
            conn[k] = conn.get(k, 0) + v
    return hist, conn


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-weight", type=int, default=12)
    args = parser.parse_args(argv)

    compiled = _kernel.compiled_census_chunk
    if compiled is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'lambda':>14} {'gluings':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for text in CASES:
        lam = Partition.parse(text)
        if lam.weight > args.max_weight:
            continue
        parts = tuple(lam)
        t_py, r_py = best_of(lambda: full_census(_kernel.python_census_chunk, parts), args.repeat)
        t_cy, r_cy = best_of(lambda: full_census(compiled, parts), args.repeat)
        if r_py != r_cy:
            print(f"kernels disagree on {text}: {r_py} vs {r_cy}")
            return 2
        total = sum(r_py[0].values())
        print(f"{text:>14} {total:>10} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
