"""Time the compiled kernels against the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row is the best wall time over ``--repeat`` runs, plus the speedup of the
compiled backend. The outputs of both backends are also compared, so a row is
only reported when the two agree to 1e-10 (long orbits accumulate
roundoff in a different order on each backend).
"""

import argparse
import math
import timeit

import numpy as np

from ga_grover import _pykernels

try:
    from ga_grover import _kernels
except ImportError:
    _kernels = None


def workloads(rng):
    a, b = rng.normal(size=8), rng.normal(size=8)
    half = 0.37
    rotor = np.array([math.cos(half), 0, 0, 0, 0.3 * math.sin(half), -0.5 * math.sin(half), 0.81 * math.sin(half), 0])
    rotor /= math.sqrt(rotor @ rotor)
    v = np.array([0, -0.25, 0, math.sqrt(1 - 0.0625), 0, 0, 0, 0])

    def grover(n, m, steps):
        mask = np.zeros(n, dtype=bool)
        mask[rng.choice(n, size=m, replace=False)] = True
        s = np.full(n, 1 / math.sqrt(n), dtype=np.complex128)
        return lambda k: k.grover_run(s, mask, s, 2.2, 1.9, steps)

    def product_loop(k):
        for _ in range(10_000):
            out = k.geometric_product(a, b)
        return out

    return [
        ("geometric_product x1e4", product_loop),
        ("conjugate_orbit 1e5 steps", lambda k: k.conjugate_orbit(rotor, v, 100_000)),
        ("grover_run N=64, 1e4 steps", grover(64, 5, 10_000)),
        ("grover_run N=4096, 200 steps", grover(4096, 17, 200)),
        ("grover_run N=2^20, 5 steps", grover(1 << 20, 3, 5)),
    ]


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.allclose(x, y, atol=1e-10, rtol=0)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; only the NumPy fallback is available")
    print(f"{'workload':32s} {'numpy [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, fn in workloads(np.random.default_rng(args.seed)):
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:32s} {t_py:11.4f} {'-':>11s} {'-':>8s}")
            continue
        if not same(fn(_pykernels), fn(_kernels)):
            raise SystemExit(f"backends disagree on {name}")
        t_cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:32s} {t_py:11.4f} {t_cy:11.4f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
