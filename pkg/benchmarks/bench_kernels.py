"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--rows N] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from berger import _core_py

try:
    from berger import _core
except ImportError:
    _core = None


def _inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    params = rng.uniform(0.5, 2.0, (n, 3))
    points = np.column_stack([rng.uniform(0.1, 1.4, n), rng.uniform(-3, 3, (n, 2))])
    return params, points


def cases(n):
    params, points = _inputs(n)
    surf = np.empty((n, 16))
    gamma, num = np.empty((n, 27)), np.empty((n, 3))
    return {
        "surface_batch (analytic)": lambda m: m.surface_batch(1.0, (1, 1, 1), params, points, 0.0, 0.0, surf),
        "surface_batch (FD)": lambda m: m.surface_batch(-1.0, (-1, 1, 1), params, points, 1e-5, 1e-3, surf),
        "connection_batch": lambda m: m.connection_batch(1.0, (-1, 1, 1), params, gamma, num),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _core_py)] + ([("cython", _core)] if _core is not None else [])
    print(f"{'kernel':28s}" + "".join(f"{name:>14s}" for name, _ in backends) + "   speedup")
    for label, fn in cases(args.rows).items():
        times = [min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for _, m in backends]
        cols = "".join(f"{t * 1e3:11.2f} ms" for t in times)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else "       n/a"
        print(f"{label:28s}{cols}{speed}")


if __name__ == "__main__":
    main()
