"""Compiled kernels vs the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on the same inputs with both implementations, then the
end-to-end Betti computation over all staircases of degree <= 5 in a
subprocess per backend (CWLSUM_PURE=1 selects the fallback).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from cwlsum import _kernels_py as pure

try:
    from cwlsum import _kernels as compiled
except ImportError:
    compiled = None


def _inputs(seed=0):
    rng = random.Random(seed)
    pts = [tuple(rng.randint(0, 6) for _ in range(4)) for _ in range(400)]
    gens = pure.minimal_elements([tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(8)])
    values = [sorted({e[i] for e in gens} | {0}) for i in range(4)]
    return pts, gens, values


def bench_kernels(repeat):
    pts, gens, values = _inputs()
    cases = {
        "minimal_elements": lambda k: k.minimal_elements(pts),
        "membership": lambda k: k.membership(gens, pts),
        "koszul_candidates": lambda k: k.koszul_candidates(gens, 4, values),
    }
    print(f"{'kernel':20s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(pure), number=1, repeat=repeat)) * 1e3
        if compiled is None:
            print(f"{name:20s} {tp:10.2f} {'n/a':>12s}")
            continue
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=repeat)) * 1e3
        print(f"{name:20s} {tp:10.2f} {tc:12.2f} {tp / tc:7.1f}x")


END_TO_END = """
import time
from cwlsum.kernels import BACKEND
from cwlsum.resolution import betti
from cwlsum.verify import enumerate_ideals_dim2, random_ideal
t0 = time.perf_counter()
for I in enumerate_ideals_dim2(5):
    betti(I)
for s in range(100):
    betti(random_ideal(4, 4, 8, s))
print(BACKEND, round(time.perf_counter() - t0, 3))
"""


def bench_end_to_end():
    print("\nbetti on 427 staircases + 100 random ideals in 4 variables")
    for pure_flag in ("0", "1"):
        env = dict(os.environ, CWLSUM_PURE=pure_flag)
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {out[0]:9s} {out[1]} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    bench_kernels(args.repeat)
    bench_end_to_end()


if __name__ == "__main__":
    main()
