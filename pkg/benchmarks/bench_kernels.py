#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the package's real workloads (defect evaluations) plus the raw
batched-product kernel, per backend, and prints the speedups.  Run with

    python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from isosym import kernels
from isosym.construct import random_commuting_tuple
from isosym.defect import isometry_defect_matrix, isosymmetry_defect_matrix


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    out = []
    for dim in (3, 8, 16, 32):
        r = random_commuting_tuple(2, dim, seed=dim)
        out.append((f"isometry defect  l=3      d=2 dim={dim:2d}",
                    lambda r=r: isometry_defect_matrix(r, 3)))
        out.append((f"isosymmetry defect (2,2)  d=2 dim={dim:2d}",
                    lambda r=r: isosymmetry_defect_matrix(r, 2, 2)))
    rng = np.random.default_rng(0)
    for dim, terms in ((4, 120), (16, 120)):
        stack = rng.standard_normal((terms, dim, dim)) \
            + 1j * rng.standard_normal((terms, dim, dim))
        mid = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        weights = rng.standard_normal(terms)
        out.append((f"sandwich sum t={terms} dim={dim:2d}",
                    lambda s=stack, m=mid, w=weights:
                    kernels.active.weighted_sandwich_sum(s, m, s, w)))
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=200)
    args = parser.parse_args()

    names = kernels.available()
    if len(names) < 2:
        print(f"only the {names[0]!r} backend is importable; "
              "build the extension to compare")
    rows = []
    for label, fn in workloads():
        timings = {}
        for name in names:
            kernels.use(name)
            fn()  # warm up
            timings[name] = best_of(fn, args.repeats)
        rows.append((label, timings))
    kernels.use(names[-1])

    header = f"{'workload':34s}" + "".join(f"{n + ' (us)':>12s}" for n in names)
    if "c" in names and "py" in names:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        line = f"{label:34s}" + "".join(
            f"{timings[n] * 1e6:12.1f}" for n in names)
        if "c" in timings and "py" in timings:
            line += f"{timings['py'] / timings['c']:10.2f}x"
        print(line)


if __name__ == "__main__":
    main()
