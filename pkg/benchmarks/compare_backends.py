#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the hot kernels on seeded pseudo-random inputs at a few sizes and
prints per-kernel timings plus the speedup of the compiled extension.

    python benchmarks/compare_backends.py [--max-size 10000000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import random
import time

from lynfac import _kernels_py as pure

try:
    from lynfac import _kernels_c as compiled
except ImportError:
    compiled = None


def best_time(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=10_000_000)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    sizes = [n for n in (10_000, 100_000, 1_000_000, 10_000_000)
             if n <= args.max_size]
    rng = random.Random(args.seed)
    print(f"compiled backend available: {compiled is not None}")
    header = f"{'kernel':<18} {'size':>10} {'pure':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        data = rng.randbytes(n)
        inverse = data.translate(bytes(255 - i for i in range(256)))
        jobs = [
            ("lyndon_cuts", (data,)),
            ("icfl_cuts", (inverse,)),
            ("border_table", (data,)),
            ("suffix_lcp_len", (data + data, 0, n)),
        ]
        for name, job_args in jobs:
            t_pure = best_time(getattr(pure, name), job_args, args.repeats)
            if compiled is None:
                print(f"{name:<18} {n:>10} {t_pure * 1e3:>10.1f}ms {'n/a':>12} {'n/a':>9}")
                continue
            t_comp = best_time(getattr(compiled, name), job_args, args.repeats)
            assert getattr(pure, name)(*job_args) == getattr(compiled, name)(*job_args)
            speedup = t_pure / t_comp if t_comp > 0 else float("inf")
            print(f"{name:<18} {n:>10} {t_pure * 1e3:>10.1f}ms "
                  f"{t_comp * 1e3:>10.2f}ms {speedup:>8.1f}x")


if __name__ == "__main__":
    main()
