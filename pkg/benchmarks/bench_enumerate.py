"""Benchmark: numba kernels vs the pure-numpy fallback for saddle enumeration.

Times `saddle_grids` (the full GSP grid plus minimality filter) on seeded
random games of growing size, for both backends, and prints the speedup.

Usage:
    python benchmarks/bench_enumerate.py [--sizes 5 6 8 10] [--repeats 20]
"""

import argparse
import time

from saddles import GeneratorConfig, GeneratorKind, generate
from saddles.kernels import MODE_WEAK, NUMBA_AVAILABLE, saddle_grids


def time_backend(game, backend, repeats):
    saddle_grids(game, MODE_WEAK, backend=backend)  # warm (JIT / allocations)
    start = time.perf_counter()
    for _ in range(repeats):
        saddle_grids(game, MODE_WEAK, backend=backend)
    return (time.perf_counter() - start) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 8, 10, 12])
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not NUMBA_AVAILABLE:
        print("numba not importable; benchmarking the numpy fallback only")

    print(f"{'size':>6} {'products':>12} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for n in args.sizes:
        game = generate(
            GeneratorConfig(GeneratorKind.UNIFORM_INT, n, n, 3, args.seed)
        )
        products = (2**n - 1) ** 2
        repeats = max(1, args.repeats // (1 if n < 10 else 10))
        t_numpy = time_backend(game, "numpy", repeats)
        if NUMBA_AVAILABLE:
            t_numba = time_backend(game, "numba", repeats)
            print(
                f"{n:>4}x{n:<2} {products:>12,} {t_numpy * 1e3:>10.2f}ms "
                f"{t_numba * 1e3:>10.2f}ms {t_numpy / t_numba:>8.1f}x"
            )
        else:
            print(f"{n:>4}x{n:<2} {products:>12,} {t_numpy * 1e3:>10.2f}ms {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
