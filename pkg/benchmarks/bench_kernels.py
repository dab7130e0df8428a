"""Compare the compiled F2 support kernels with the pure-Python fallback.

Two levels are timed: the raw kernels on support tuples, and an end-to-end
workload (series products, unit inversion, Smith invariants) run in a child
process once per backend, switched with ``HAHNALG_PURE_PYTHON``.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from hahnalg import _pykernels

try:
    from hahnalg import _kernels
except ImportError:
    _kernels = None

WORKLOAD = """
import random, time
from fractions import Fraction
from hahnalg import BACKEND
from hahnalg.series import FiniteSeries, invert_unit
from hahnalg.smith import random_matrix, smith_valuations, smith_by_elimination
rng = random.Random(5)
exps = [Fraction(k, 12) for k in range(0, 96)]
series = [FiniteSeries(rng.sample(exps, 24)) for _ in range(60)]
start = time.perf_counter()
for a in series:
    for b in series[:20]:
        a * b
for a in series[:20]:
    invert_unit(FiniteSeries.one() + FiniteSeries([e for e in a.support if e > 0]), 6)
for _ in range(40):
    m = random_matrix(rng)
    smith_valuations(m)
    smith_by_elimination(m)
print(BACKEND, time.perf_counter() - start)
"""


def supports(rng, size, span):
    return tuple(sorted(rng.sample(range(span), size)))


def bench_raw(repeat):
    rng = random.Random(1)
    rows = []
    for size in (8, 64, 256):
        a, b = supports(rng, size, 8 * size), supports(rng, size, 8 * size)
        for name in ("xor_merge", "mul_mod2"):
            number = max(1, 20000 // (size if name == "xor_merge" else size * size // 8 + 1))
            py = min(timeit.repeat(lambda: getattr(_pykernels, name)(a, b), number=number, repeat=repeat)) / number
            if _kernels is None:
                rows.append((name, size, py, None))
                continue
            cy = min(timeit.repeat(lambda: getattr(_kernels, name)(a, b), number=number, repeat=repeat)) / number
            rows.append((name, size, py, cy))
    return rows


def bench_workload():
    out = {}
    for pure in ("1", ""):
        env = dict(os.environ, HAHNALG_PURE_PYTHON=pure)
        if not pure:
            env.pop("HAHNALG_PURE_PYTHON")
        proc = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, seconds = proc.stdout.split()
        out[backend] = float(seconds)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<10} {'terms':>6} {'python us':>11} {'cython us':>11} {'speedup':>8}")
    for name, size, py, cy in bench_raw(args.repeat):
        if cy is None:
            print(f"{name:<10} {size:>6} {py * 1e6:>11.2f} {'n/a':>11} {'n/a':>8}")
        else:
            print(f"{name:<10} {size:>6} {py * 1e6:>11.2f} {cy * 1e6:>11.2f} {py / cy:>7.1f}x")

    print()
    times = bench_workload()
    for backend, seconds in sorted(times.items()):
        print(f"workload [{backend}]: {seconds:.3f} s")
    if "cython" in times and "python" in times:
        print(f"workload speedup: {times['python'] / times['cython']:.2f}x")


if __name__ == "__main__":
    main()
