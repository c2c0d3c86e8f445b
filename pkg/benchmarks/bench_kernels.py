"""Time the batched Jacobiator: numba kernel against the numpy einsum path.

    python3 benchmarks/bench_kernels.py [--batch 20000] [--dim 6] [--repeat 5]

Run with HACS6_DISABLE_NUMBA=1 to confirm the fallback is picked up.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from hacs6 import kernels
from hacs6.verify.a1solver import default_grid


def random_batch(n: int, dim: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    C = rng.integers(-3, 4, size=(n, dim, dim, dim)).astype(np.int64)
    return C - C.transpose(0, 2, 1, 3)


def solver_batch() -> np.ndarray:
    """Integer structure constants of the A1 solver grid (denominators cleared)."""
    rows = []
    for ans in default_grid():
        c = ans.algebra().c
        den = np.lcm.reduce([int(v.denominator) for v in c.ravel()])
        rows.append(np.array([int(v * den) for v in c.ravel()], dtype=np.int64).reshape(c.shape))
    return np.stack(rows)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, default=20000)
    ap.add_argument("--dim", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    batches = {"random": random_batch(args.batch, args.dim), "a1-grid": solver_batch()}
    print(f"backend: {kernels.backend_name()}")
    for name, C in batches.items():
        if kernels.HAVE_NUMBA:
            kernels.jacobi_max_batch(C[:2], use_numba=True)  # compile outside the timing
        t_np = best_of(lambda: kernels.jacobi_max_batch(C, use_numba=False), args.repeat)
        line = f"{name:8s} batch={C.shape[0]:6d} dim={C.shape[1]:2d}  numpy {t_np * 1e3:8.2f} ms"
        if kernels.HAVE_NUMBA:
            t_nb = best_of(lambda: kernels.jacobi_max_batch(C, use_numba=True), args.repeat)
            same = np.array_equal(kernels.jacobi_max_batch(C, use_numba=True),
                                  kernels.jacobi_max_batch(C, use_numba=False))
            line += f"  numba {t_nb * 1e3:8.2f} ms  speedup {t_np / t_nb:5.1f}x  agree={same}"
        print(line)


if __name__ == "__main__":
    main()
