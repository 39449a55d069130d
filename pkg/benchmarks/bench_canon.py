"""Compare the compiled and pure-Python relabelling kernels.

Times ``six_best`` on the data of random six-point sets (all 720
relabellings, as in the brute-force canonical form) and checks that both
kernels return the same result.

usage: python benchmarks/bench_canon.py [--sets N] [--seed S]
"""
from __future__ import annotations

import argparse
import itertools
import random
import time

from rp2conf import _canon_py
from rp2conf.census import random_generic
from rp2conf.classify import cycle_pairs, six_data

try:
    from rp2conf import _canon_c
except ImportError:
    _canon_c = None


def kernel_input(data):
    idx = {x: i for i, x in enumerate(data.labels)}
    pairs = [[(idx[a], idx[b]) for a, b in cycle_pairs(data.words[x]) + cycle_pairs(data.mseq[x])] for x in data.labels]
    interior = [int(data.interior[x]) for x in data.labels]
    return pairs, interior


def bench(fn, inputs, perms, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [fn(p, i, perms) for p, i in inputs]
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--sets", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    inputs = [kernel_input(six_data(random_generic(rng, 6, 50)[0])) for _ in range(args.sets)]
    perms = [list(p) for p in itertools.permutations(range(6))]
    t_py, r_py = bench(_canon_py.six_best, inputs, perms)
    print(f"pure python : {t_py:8.3f} s for {args.sets} x 720 relabellings")
    if _canon_c is None:
        print("compiled    : not built (pip install -e . --no-build-isolation with Cython available)")
        return
    t_c, r_c = bench(_canon_c.six_best, inputs, perms)
    assert r_py == r_c, "kernels disagree"
    print(f"compiled    : {t_c:8.3f} s   speed-up x{t_py / t_c:.1f}, results identical")


if __name__ == "__main__":
    main()
