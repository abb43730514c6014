"""Side-by-side timing of the oracle's numeric kernels.

The oracle spends essentially all of its time in two places: building the
moment-constraint rows and solving the dense stationarity system with
partial pivoting. Both exist twice, as jitted loops (numba) and as pure
NumPy. This script times them head to head on the systems the oracle
actually assembles, checks the two backends agree, and prints a table.

The jitted path pays a one-time compile cost, so it is warmed up before
timing; reported numbers are best-of-N wall times.

Usage:
    python benchmarks/bench_kernels.py [--sizes 129 257 513 1025] [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from poincare_sharp import _kernels_numpy, oracle

try:
    from poincare_sharp import _kernels_numba
except ImportError:
    _kernels_numba = None


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[129, 257, 513, 1025])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--x", type=float, default=0.25)
    args = parser.parse_args()

    if _kernels_numba is None:
        print("numba not available; timing the NumPy backend only")

    header = f"{'nodes':>6} {'kernel':>16} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for nodes in args.sizes:
        kkt, rhs, _, grid = oracle.assemble_system(args.m, args.x, nodes)

        cases = [
            ("hat_moment_rows", lambda mod: mod.hat_moment_rows(grid, args.m)),
            ("lu_solve", lambda mod: mod.lu_solve(kkt, rhs)),
        ]
        for name, call in cases:
            if _kernels_numba is not None:
                call(_kernels_numba)  # trigger JIT compilation outside the timer
                got_nb = call(_kernels_numba)
            got_np = call(_kernels_numpy)
            if _kernels_numba is not None:
                a = got_np[0] if isinstance(got_np, tuple) else got_np
                b = got_nb[0] if isinstance(got_nb, tuple) else got_nb
                if not np.allclose(a, b, rtol=1e-9, atol=1e-12):
                    raise SystemExit(f"backend mismatch in {name} at nodes={nodes}")

            t_np = best_of(lambda: call(_kernels_numpy), args.repeats)
            if _kernels_numba is not None:
                t_nb = best_of(lambda: call(_kernels_numba), args.repeats)
                print(f"{nodes:>6} {name:>16} {t_np * 1e3:>12.3f} {t_nb * 1e3:>12.3f} {t_np / t_nb:>8.2f}x")
            else:
                print(f"{nodes:>6} {name:>16} {t_np * 1e3:>12.3f} {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
