#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--full]

--full adds the largest sizes (a 512-element axiom check and a
19-element ideal enumeration); without it everything finishes in a few
seconds even on the pure backend.
"""

import argparse
import time

import numpy as np

from bckspec.constructions import cbck_union, standard_chain
from bckspec.kernels import available_backends


def best_of(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def chain_table(n):
    return np.array([[max(x - y, 0) for y in range(n)] for x in range(n)], dtype=np.int32)


def union_table(blocks):
    return np.array(cbck_union([standard_chain(1)] * blocks).algebra.table, dtype=np.int32)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="include the largest sizes")
    args = parser.parse_args()

    backends = available_backends()
    if len(backends) == 1:
        print("compiled backend unavailable; benchmarking the pure backend only")

    axiom_sizes = [64, 128, 256] + ([512] if args.full else [])
    ideal_sizes = [11, 13, 15] + ([17, 19] if args.full else [])

    rows = []
    for n in axiom_sizes:
        table = chain_table(n)
        times = {
            name: best_of(lambda impl=impl: impl.axiom_witnesses(table))
            for name, impl in backends.items()
        }
        rows.append(("axioms n=%d" % n, times))
    for n in ideal_sizes:
        table = union_table(n - 1)  # union of n-1 two-element chains
        times = {
            name: best_of(lambda impl=impl: impl.enumerate_ideal_masks(table), repeats=1)
            for name, impl in backends.items()
        }
        rows.append(("ideals n=%d (2^%d masks)" % (n, n - 1), times))

    names = sorted(backends)
    header = "%-28s" % "kernel" + "".join("%14s" % b for b in names)
    if len(names) == 2:
        header += "%10s" % "speedup"
    print(header)
    print("-" * len(header))
    for label, times in rows:
        line = "%-28s" % label + "".join("%12.4fs" % times[b] for b in names)
        if len(names) == 2:
            line += "%9.1fx" % (times["pure"] / max(times["compiled"], 1e-9))
        print(line)


if __name__ == "__main__":
    main()
