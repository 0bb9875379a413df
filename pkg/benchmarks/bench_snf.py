"""Benchmark: compiled int64 SNF kernel vs the pure-Python bigint path.

Runs Smith reductions over random integer matrices of growing size and
over the boundary blocks of a real homology computation, timing both
implementations on identical inputs and checking they agree on the
invariant factors.

Usage: python3 benchmarks/bench_snf.py [--sizes 6,8,10,12] [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import time

from khoarrow.snf import KERNEL, smith_normal_form_py

try:
    from khoarrow import _snfcore
except ImportError:
    _snfcore = None


def _diag(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_random(sizes, repeat, rng):
    print(f"{'size':>6} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n in sizes:
        # boundary maps have entries in {-2..2}; larger dense random
        # inputs overflow int64 through intermediate coefficient swell
        # and just measure the bigint path against itself
        M = [[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)]
        t_py, (D_py, _, _) = _time(smith_normal_form_py, M, repeat=repeat)
        if _snfcore is None:
            print(f"{n:>6} {t_py * 1e3:>10.2f}ms {'-':>12} {'-':>9}")
            continue
        try:
            t_c, (D_c, _, _) = _time(
                _snfcore.smith_normal_form_i64, M, repeat=repeat)
        except OverflowError:
            print(f"{n:>6} {t_py * 1e3:>10.2f}ms {'overflow':>12} {'-':>9}")
            continue
        assert _diag(D_py) == _diag(D_c), "kernels disagree"
        print(f"{n:>6} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms "
              f"{t_py / t_c:>8.1f}x")


def bench_homology(repeat):
    """Time the boundary blocks of the odd figure-eight complex."""
    import numpy as np

    from khoarrow.algebra import ODD
    from khoarrow.chain import build_unreduced
    from khoarrow.corpus import get

    c = build_unreduced(get("figure8"), ODD)
    blocks = [np.asarray(b) for b in c.boundaries.values() if np.any(b)]
    print(f"\nboundary blocks of the odd figure-eight complex "
          f"({len(blocks)} matrices, "
          f"largest {max(b.shape[0] * b.shape[1] for b in blocks)} entries)")

    def run_py():
        return [smith_normal_form_py(b)[0] for b in blocks]

    t_py, _ = _time(run_py, repeat=repeat)
    print(f"python   : {t_py * 1e3:9.2f}ms")
    if _snfcore is not None:
        def run_c():
            return [_snfcore.smith_normal_form_i64(
                [[int(x) for x in row] for row in b])[0] for b in blocks]
        t_c, _ = _time(run_c, repeat=repeat)
        print(f"compiled : {t_c * 1e3:9.2f}ms   ({t_py / t_c:.1f}x)")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="6,8,10,12")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"active kernel: {KERNEL}")
    rng = random.Random(args.seed)
    bench_random([int(s) for s in args.sizes.split(",")], args.repeat, rng)
    bench_homology(args.repeat)


if __name__ == "__main__":
    main()
