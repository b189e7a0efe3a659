"""Benchmark the cyclic Jacobi eigensolver: compiled kernel vs pure-numpy
fallback, with numpy.linalg.eigvalsh as the reference baseline.

Usage: python benchmarks/bench_jacobi.py [--sizes 4,9,16,25,49] [--repeats 20]
"""

import argparse
import time

import numpy as np

from entmon import _jacobi_py

try:
    from entmon import _jacobi_cy
except ImportError:
    _jacobi_cy = None


def random_hermitian(n, rng):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return np.ascontiguousarray((a + a.conj().T) / 2)


def time_solver(solve, matrices, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in matrices:
            solve(m)
        best = min(best, time.perf_counter() - start)
    return best / len(matrices)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,9,16,25,49")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--batch", type=int, default=50,
                        help="matrices per size")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    sizes = [int(tok) for tok in args.sizes.split(",")]

    print(f"{'n':>4} {'numpy (us)':>12} {'python (us)':>12} "
          f"{'compiled (us)':>14} {'speedup':>8}")
    for n in sizes:
        matrices = [random_hermitian(n, rng) for _ in range(args.batch)]
        t_np = time_solver(np.linalg.eigvalsh, matrices, args.repeats)
        t_py = time_solver(
            lambda m: _jacobi_py.jacobi_eigenvalues(m), matrices,
            max(1, args.repeats // 4))
        if _jacobi_cy is not None:
            t_cy = time_solver(
                lambda m: _jacobi_cy.jacobi_eigenvalues(m), matrices,
                args.repeats)
            # agreement spot check
            eigs_py, _, _ = _jacobi_py.jacobi_eigenvalues(matrices[0])
            eigs_cy, _, _ = _jacobi_cy.jacobi_eigenvalues(matrices[0])
            assert np.allclose(np.sort(eigs_py), np.sort(eigs_cy),
                               atol=1e-10)
            cy_col = f"{t_cy * 1e6:14.1f}"
            speedup = f"{t_py / t_cy:7.1f}x"
        else:
            cy_col = f"{'n/a':>14}"
            speedup = f"{'n/a':>8}"
        print(f"{n:>4} {t_np * 1e6:12.1f} {t_py * 1e6:12.1f} "
              f"{cy_col} {speedup}")

    if _jacobi_cy is None:
        print("\ncompiled kernel not built; showing fallback only")


if __name__ == "__main__":
    main()
