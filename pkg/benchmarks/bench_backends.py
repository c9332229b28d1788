#!/usr/bin/env python3
"""Times the compiled prime-field kernel against its pure-Python twin.

Runs identical workloads through ectorsion._speedups (if built) and
ectorsion._purekernel, checks that both produce identical results, and
prints one line per workload with the speedup.  Exits cleanly with a note
when the compiled extension is unavailable.

Usage: python3 benchmarks/bench_backends.py [--scale N]
"""

from __future__ import annotations

import argparse
import random
import time

from ectorsion import _purekernel as pure

try:
    from ectorsion import _speedups as fast
except ImportError:  # extension not built: still time the fallback
    fast = None


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def workloads(scale: int):
    rng = random.Random(1234)
    p_big = 100_003
    p_mid = 10_007
    p_small = 211
    curve = (p_mid, 1, 1, 0)  # y^2 = x (x^2 + x + 1)
    scalars = [rng.getrandbits(60) for _ in range(400 * scale)]
    base = None
    for x in range(1, p_mid):
        t = ((x * x + 1 * x + 1) * x) % p_mid
        r = pure.fp_sqrt(t, p_mid)
        if r >= 0:
            base = (x, r)
            break

    def w_sqrt(mod):
        return [mod.fp_sqrt(a, p_big) for a in range(1, 20_000 * scale)]

    def w_points(mod):
        return mod.cubic_points(p_big, 1, 1, 0)

    def w_smul(mod):
        return [mod.cubic_smul(*curve, n, base) for n in scalars]

    def w_orders(mod):
        return mod.cubic_all_orders(p_small, 1, 1, 0, 4 * p_small)

    def w_double(mod):
        pts = mod.cubic_points(p_mid, 1, 1, 0)
        return mod.cubic_double_all(p_mid, 1, 1, 0, pts)

    return [
        ("fp_sqrt sweep", w_sqrt),
        ("cubic_points p=100003", w_points),
        (f"cubic_smul x{len(scalars)}", w_smul),
        ("cubic_all_orders p=211", w_orders),
        ("double all points p=10007", w_double),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1,
                    help="multiply workload sizes by N (default 1)")
    args = ap.parse_args()

    if fast is None:
        print("compiled extension not built; timing the pure backend only")
    header = f"{'workload':<28}{'python':>10}{'c':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, work in workloads(args.scale):
        py_out, py_t = timed(lambda: work(pure))
        if fast is None:
            print(f"{name:<28}{py_t:>9.3f}s{'-':>10}{'-':>9}")
            continue
        c_out, c_t = timed(lambda: work(fast))
        if c_out != py_out:
            print(f"{name:<28}BACKENDS DISAGREE")
            return 1
        ratio = py_t / c_t if c_t > 0 else float("inf")
        print(f"{name:<28}{py_t:>9.3f}s{c_t:>9.3f}s{ratio:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
