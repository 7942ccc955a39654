"""Time the numba loop kernels against the numpy versions.

    python benchmarks/bench_kernels.py [--max-n 8] [--repeat 5]

With ``SCHUBSEM_DISABLE_NUMBA=1`` (or numba missing) the loop kernels run as
plain Python, which is what the "loop" column then measures.
"""

import argparse
import timeit

import numpy as np

from schubsem import kernels
from schubsem._accel import backend
from schubsem.perm import perm_array


def random_grids(n, m, seed=0):
    rng = np.random.default_rng(seed)
    mask = np.add.outer(np.arange(n), np.arange(n)) < n - 1
    return np.ascontiguousarray((rng.random((m, n, n)) < 0.4).astype(np.uint8) * mask)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"loop backend: {backend()}")
    # compile outside the timed region
    warm = perm_array(3)
    kernels.lehmer_codes_loop(warm)
    kernels.contains_pattern_loop(warm, np.array([1, 3, 2], dtype=np.int64))
    kernels.trace_grids_loop(random_grids(3, 2))

    print(f"{'kernel':<22}{'n':>3}{'rows':>8}{'loop ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in range(4, args.max_n + 1):
        perms = perm_array(n)
        pat = np.array([1, 4, 3, 2], dtype=np.int64)
        grids = random_grids(n, 20000)
        cases = [
            ("lehmer_codes", len(perms), lambda: kernels.lehmer_codes_loop(perms),
             lambda: kernels.lehmer_codes_numpy(perms)),
            ("contains 1432", len(perms), lambda: kernels.contains_pattern_loop(perms, pat),
             lambda: kernels.contains_pattern_numpy(perms, pat)),
            ("trace_grids", len(grids), lambda: kernels.trace_grids_loop(grids),
             lambda: kernels.trace_grids_numpy(grids)),
        ]
        for name, rows, loop, vec in cases:
            a = best(loop, args.repeat) * 1000
            b = best(vec, args.repeat) * 1000
            print(f"{name:<22}{n:>3}{rows:>8}{a:>12.2f}{b:>12.2f}{b / a:>9.1f}x")


if __name__ == "__main__":
    main()
