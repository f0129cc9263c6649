"""Compare the compiled and numpy kernels on the closed-form tables.

    python benchmarks/bench_kernels.py [--points N] [--repeat R]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from cik import kernels
from cik.clark_ismail.numeric import _x_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if kernels._c_impl is None:
        print("compiled kernel not built; only the numpy backend is available")
    vs = np.linspace(7.0, 20.0, args.points)
    xs = 1.0 / np.expm1(vs)
    print(f"{'j=k':>4} {'table':>8} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8} {'max rel diff':>13}")
    for n in (2, 4, 8, 12, 16, 24):
        table = _x_table(n, n)
        py = min(timeit.repeat(lambda: kernels.py_bivariate_horner(table, 0, vs, xs), number=1, repeat=args.repeat))
        line = f"{n:>4} {str(table.shape):>8} {py * 1e3:>10.2f}"
        if kernels._c_impl is not None:
            c = min(timeit.repeat(lambda: kernels.c_bivariate_horner(table, 0, vs, xs), number=1, repeat=args.repeat))
            a = kernels.c_bivariate_horner(table, 0, vs, xs)
            b = kernels.py_bivariate_horner(table, 0, vs, xs)
            diff = float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))
            line += f" {c * 1e3:>10.2f} {py / c:>8.1f} {diff:>13.1e}"
        print(line)


if __name__ == "__main__":
    main()
