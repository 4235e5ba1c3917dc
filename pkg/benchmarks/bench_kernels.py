"""Compare the compiled and pure-Python kernels.

Run with ``python3 benchmarks/bench_kernels.py [--points N]``. The kernel rows
time each hot loop directly; the last row times whole classifications, where
exact Fraction arithmetic outside the kernels also counts.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from quintic_atlas import _pykernels
from quintic_atlas.invariants import TABLES
from quintic_atlas.polycore import Poly
from quintic_atlas.sturm import sturm_chain

try:
    from quintic_atlas import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_tables(mod, points):
    def run():
        for pt in points:
            for tab in TABLES.values():
                mod.eval_table(tab.exps, tab.coeffs, pt)
    return _time(run)


def bench_variations(mod, chains, xs):
    def run():
        for ch in chains:
            for num, den in xs:
                mod.sign_variations_at(ch, num, den)
    return _time(run)


_PIPELINE = """
import random, time
from quintic_atlas.invariants import QuinticCoeffs
from quintic_atlas.classifier import classify_real
rng = random.Random(7)
pts = [QuinticCoeffs(*(rng.randint(-10, 10) for _ in range(5))) for _ in range({n})]
t = time.perf_counter()
for c in pts:
    classify_real(c)
print(time.perf_counter() - t)
"""


def bench_pipeline(pure: bool, n: int) -> float:
    env = dict(os.environ, QUINTIC_ATLAS_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", _PIPELINE.format(n=n)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled kernels are not built; run pip install -e . --no-build-isolation")

    rng = random.Random(args.seed)
    small = [[rng.randint(-10, 10) for _ in range(5)] for _ in range(args.points)]
    big = [[rng.randint(-10**40, 10**40) for _ in range(5)] for _ in range(args.points // 10)]
    chains = []
    while len(chains) < args.points // 3:
        f = Poly([rng.randint(-10, 10) for _ in range(5)] + [1])
        chains.append(sturm_chain(f)._ints)
    xs = [(rng.randint(-50, 50), rng.randint(1, 16)) for _ in range(20)]

    rows = [
        ("eval_table, |coeff| <= 10", bench_tables(_pykernels, small), bench_tables(_ckernels, small)),
        ("eval_table, 40-digit coeffs", bench_tables(_pykernels, big), bench_tables(_ckernels, big)),
        ("sign_variations_at", bench_variations(_pykernels, chains, xs), bench_variations(_ckernels, chains, xs)),
        ("classify_real end to end", bench_pipeline(True, args.points), bench_pipeline(False, args.points)),
    ]
    print(f"{'benchmark':32s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, py, cy in rows:
        print(f"{name:32s} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
