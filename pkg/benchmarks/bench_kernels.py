"""Compiled kernels against the pure-Python fallback on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends get the same inputs; results are checked for agreement before
any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from tournakit import _pykernels
from tournakit.core import random_tournament
from tournakit.patterns import enumerate_path_types

try:
    from tournakit import _ckernels
except ImportError:
    sys.exit("compiled kernels not built; run pip install -e . --no-build-isolation")


def workloads(seed: int = 0):
    rng = random.Random(seed)
    t7 = [random_tournament(7, rng) for _ in range(30)]
    t10 = [random_tournament(10, rng) for _ in range(5)]
    t9 = [random_tournament(9, rng) for _ in range(20)]
    paths7 = [p.dirs for p in enumerate_path_types(7)]
    paths10 = [p.dirs for p in enumerate_path_types(10)][:20]
    full7, full10 = (1 << 7) - 1, (1 << 10) - 1
    cyc = [tuple(rng.getrandbits(1) for _ in range(9)) for _ in range(20)]
    cyc = [c if 0 < sum(c) < 9 else (1,) + c[1:-1] + (0,) for c in cyc]
    return {
        "ham_path_starts n=7": lambda k: [k.ham_path_starts(t.out, d, full7, full7) for t in t7 for d in paths7],
        "ham_path_count n=10": lambda k: [k.ham_path_count(t.out, d) for t in t10 for d in paths10],
        "cycle_exists n=9": lambda k: [k.cycle_exists(t.out, c) for t, c in zip(t9, cyc)],
        "canonical n=7": lambda k: [k.canonical(t.out) for t in t7],
        "canonical n=9": lambda k: [k.canonical(t.out) for t in t9],
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'kernel':24} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in workloads().items():
        if job(_pykernels) != job(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: job(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:24} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
