#!/usr/bin/env python3
"""Time the hot kernels on both backends and check they agree bit for bit.

The compiled extension exists purely for speed: every kernel has a pure
Python twin in ``falaudit._slowloops`` with identical semantics, and the
package promises the two produce identical bits.  This script measures
what the extension buys and verifies the promise on realistic workloads.

Run from the repository root::

    python3 benchmarks/benchmark_backends.py [--repeats N]
"""

import argparse
import math
import sys
import time

import numpy as np

from falaudit import EnergyNorm, FalParams, RateConfig
from falaudit import _slowloops as slow

try:
    from falaudit import _fastloops as fast
except ImportError:
    fast = None

S_STAR = 4.2856
S0 = 15.0


def coefficient(chi, nu):
    cfg = RateConfig.from_chi(chi=chi, eta=2.0, nu=nu, s_star=S_STAR, s0=S0)
    return FalParams(cfg.mu, EnergyNorm(0.0, 2.0, S_STAR), cfg.nu).coefficient


C_REAL = coefficient(0.25, 0.25)
C_CPLX = 2.0 * 0.05 * 2.0 / math.gamma(1.5)
C_CONST = math.log(S0 - S_STAR) - S_STAR / (S0 - S_STAR)


def w_real_record(mod):
    out = np.empty(100001)
    n, code = mod.run_real_record(S0, C_REAL, S_STAR, 0.25, 100000, 1e12, out)
    return code, n, out[:n]


def w_real_for_index(mod):
    # settles by first passage around k=95k, so this is a long hot loop
    return mod.run_real_for_index(
        S0, C_REAL, S_STAR, 0.25, 120000, mod.FIRST_PASSAGE, 7.2e-4, 1e12
    )


def w_complex_record(mod):
    out_re = np.empty(100001)
    out_im = np.empty(100001)
    n, code = mod.run_complex_record(
        6.0, 1e-3, C_CPLX, 5.0, 1.5, 100000, 1e12, out_re, out_im
    )
    return code, n, out_re[:n], out_im[:n]


def w_eq21star_fill(mod):
    out = np.empty(20000)
    mod.eq21star_fill(0.25, C_CONST, S_STAR, S0, 1e-10, out)
    return (out,)


WORKLOADS = [
    ("run_real_record (100k steps)", w_real_record),
    ("run_real_for_index (~95k steps)", w_real_for_index),
    ("run_complex_record (100k steps)", w_complex_record),
    ("eq21star_fill (20k solves)", w_eq21star_fill),
]


def assert_identical(a, b):
    assert type(a) is type(b) and len(a) == len(b)
    for x, y in zip(a, b):
        if isinstance(x, np.ndarray):
            assert x.shape == y.shape and np.array_equal(x, y)
        else:
            assert x == y


def best_of(fn, mod, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(mod)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="timings per kernel; best is kept")
    args = parser.parse_args(argv)

    if fast is None:
        print("compiled backend not built; nothing to compare against", file=sys.stderr)
        return 1

    print(f"backends: {slow.BACKEND} vs {fast.BACKEND}  (best of {args.repeats})\n")
    print(f"{'kernel':<34}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, fn in WORKLOADS:
        assert_identical(fn(slow), fn(fast))
        t_slow = best_of(fn, slow, args.repeats)
        t_fast = best_of(fn, fast, args.repeats)
        print(f"{label:<34}{t_slow:>10.4f} s{t_fast:>10.4f} s{t_slow / t_fast:>9.1f}x")
    print("\nall outputs bit-identical across backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
