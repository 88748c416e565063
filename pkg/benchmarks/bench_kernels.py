#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

The dual scan iterates all 4^n packed vectors and tests orthogonality
against a generator matrix; the closure does a BFS over the additive
subgroup.  Both dominate the codeword-level verification, which is why
they live in the compiled extension.

Usage: python3 benchmarks/bench_kernels.py [--max-n 9]
"""

import argparse
import time

from z4hull.code import all_codes
from z4hull.factor import factor_table
from z4hull.kernels import _pure
from z4hull.oracle import code_codewords

try:
    from z4hull.kernels import _core
except ImportError:
    _core = None


def representative_generators(n):
    """Shift-expanded generators of a mid-sized code of length n."""
    codes = list(all_codes(factor_table(n)))
    code = codes[len(codes) // 2]
    return code_codewords(code).gens


def bench(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()

    print(f"{'kernel':<12} {'n':>3} {'compiled':>12} {'pure':>12} {'speedup':>9}")
    for n in range(5, args.max_n + 1, 2):
        gens = representative_generators(n)
        rows = []
        t_pure = bench(_pure.dual_scan, gens, n, repeat=1)
        t_core = bench(_core.dual_scan, gens, n) if _core else None
        rows.append(("dual_scan", t_core, t_pure))
        t_pure = bench(_pure.closure, gens, n, repeat=1)
        t_core = bench(_core.closure, gens, n) if _core else None
        rows.append(("closure", t_core, t_pure))
        for name, t_core, t_pure in rows:
            if t_core is None:
                print(f"{name:<12} {n:>3} {'(not built)':>12} {t_pure:>11.4f}s")
            else:
                print(
                    f"{name:<12} {n:>3} {t_core:>11.4f}s {t_pure:>11.4f}s "
                    f"{t_pure / t_core:>8.1f}x"
                )


if __name__ == "__main__":
    main()
