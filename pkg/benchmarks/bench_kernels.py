"""Compare the compiled and pure-Python arithmetic kernels.

Runs the raw polynomial product on random inputs with both kernel modules,
then times a full n=4 grid evaluation once per backend in a fresh
interpreter (the backend is chosen at import time).

    python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from jmhomology import _kernels_py

try:
    from jmhomology import _kernels
except ImportError:
    _kernels = None

GRID_SNIPPET = """
import itertools, time
from jmhomology import BACKEND, engine
t0 = time.perf_counter()
for rest in itertools.product(range(4), repeat={m}):
    engine.evaluate_full((0,) + rest)
    engine.evaluate_syt_sum((0,) + rest)
print(BACKEND, time.perf_counter() - t0)
"""


def random_poly(rng, terms, nvars=6):
    out = {}
    for _ in range(terms):
        m = [rng.randint(-3, 3) for _ in range(nvars)]
        while m and m[-1] == 0:
            m.pop()
        out[tuple(m)] = rng.randint(-50, 50) or 1
    return out


def bench_poly_mul(size, number):
    rng = random.Random(0)
    f, g = random_poly(rng, size), random_poly(rng, size)
    rows = []
    for name, mod in (("python", _kernels_py), ("cython", _kernels)):
        if mod is None:
            continue
        secs = min(timeit.repeat(lambda: mod.poly_mul(f, g), number=number, repeat=5)) / number
        rows.append((name, secs))
    return rows


def bench_grid(n):
    rows = []
    for flag in ("1", "0"):
        env = dict(os.environ, JMH_PURE_PYTHON=flag)
        out = subprocess.run(
            [sys.executable, "-c", GRID_SNIPPET.format(m=n - 1)],
            env=env, capture_output=True, text=True, check=True,
        ).stdout.split()
        rows.append((out[0], float(out[1])))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="n=3 grid and smaller products")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels not built; only the pure-Python backend is available")
    for size in (10, 40) if args.quick else (10, 40, 120):
        rows = bench_poly_mul(size, 20 if args.quick else 50)
        cells = "  ".join(f"{name} {secs * 1e6:9.1f} us" for name, secs in rows)
        print(f"poly_mul {size:>3}x{size:<3} {cells}{_speedup(rows)}")
    n = 3 if args.quick else 4
    rows = bench_grid(n)
    cells = "  ".join(f"{name} {secs:7.2f} s" for name, secs in rows)
    print(f"grid n={n} (both evaluators)  {cells}{_speedup(rows)}")


def _speedup(rows):
    d = dict(rows)
    if "python" in d and "cython" in d and d["cython"] > 0:
        return f"  speedup {d['python'] / d['cython']:.1f}x"
    return ""


if __name__ == "__main__":
    main()
