"""Time the numba and numpy backends on the special-function kernels and a sweep.

    python benchmarks/bench_kernels.py [--size 100000] [--repeat 5]

The sweep part evaluates stationary variances of the strong-coupling point on
a temperature grid, which is where the digamma kernel is hot.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from qlandauer import specfun
from qlandauer._accel import HAVE_NUMBA

SWEEP = """
import numpy as np, time
from qlandauer.oscillator import OscillatorParams, stationary_variances
p = OscillatorParams(M=1.1, omega=1.2, eta=48.0, omega_D=1200.0)
T = np.geomspace(0.01, 10.0, {n})
stationary_variances(p, T[:2])
t0 = time.perf_counter()
for _ in range({repeat}):
    stationary_variances(p, T)
print((time.perf_counter() - t0) / {repeat})
"""


def kernel_times(size, repeat):
    rng = np.random.default_rng(0)
    z = rng.uniform(-30, 30, size) + 1j * rng.uniform(-30, 30, size)
    rows = []
    for name in ("log_gamma", "digamma", "trigamma"):
        func = getattr(specfun, name)
        for backend in ("numba", "numpy"):
            if backend == "numba" and not HAVE_NUMBA:
                continue
            func(z[:10], backend=backend)  # compile / warm caches
            t = min(timeit.repeat(lambda: func(z, backend=backend), number=1, repeat=repeat))
            rows.append((name, backend, t))
    return rows


def sweep_time(backend, points, repeat):
    env = dict(os.environ, QLANDAUER_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", SWEEP.format(n=points, repeat=repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=100_000, help="complex arguments per kernel call")
    ap.add_argument("--points", type=int, default=2000, help="temperatures in the variance sweep")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'kernel':<10} {'backend':<7} {'seconds':>10} {'ns/arg':>8}")
    for name, backend, t in kernel_times(args.size, args.repeat):
        print(f"{name:<10} {backend:<7} {t:10.4f} {1e9 * t / args.size:8.1f}")
    print()
    backends = ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
    for backend in backends:
        t = sweep_time(backend, args.points, args.repeat)
        print(f"variance sweep, {args.points} temperatures, {backend}: {t:.4f} s")


if __name__ == "__main__":
    main()
