"""Batched integer Jacobiator kernels for grid sweeps.

Grid searches (the A1 ansatz solver) evaluate the Jacobi identity for tens of
thousands of structure-constant tensors that are integral after clearing a
common denominator.  In int64 this is exact as long as entries stay small,
which :func:`jacobi_max_batch` checks before dispatching.

Set ``HACS6_DISABLE_NUMBA=1`` to force the pure-numpy path.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("HACS6_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    HAVE_NUMBA = False

# |c| <= 2**20 keeps every product sum well inside int64
INT_BOUND = 1 << 20


def _jacobi_max_numpy(C: np.ndarray) -> np.ndarray:
    # T[b,i,j,l,m] = sum_k c[j,l,k] c[i,k,m]  ==  [e_i, [e_j, e_l]]_m
    T = np.einsum("bjlk,bikm->bijlm", C, C)
    jac = T + T.transpose(0, 3, 1, 2, 4) + T.transpose(0, 2, 3, 1, 4)
    return np.abs(jac).reshape(C.shape[0], -1).max(axis=1)


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _jacobi_max_numba(C):
        nb, n = C.shape[0], C.shape[1]
        out = np.zeros(nb, dtype=np.int64)
        for b in range(nb):
            best = 0
            for i in range(n):
                for j in range(i + 1, n):
                    for l in range(j + 1, n):
                        for m in range(n):
                            s = 0
                            for k in range(n):
                                s += (C[b, j, l, k] * C[b, i, k, m]
                                      + C[b, l, i, k] * C[b, j, k, m]
                                      + C[b, i, j, k] * C[b, l, k, m])
                            if s < 0:
                                s = -s
                            if s > best:
                                best = s
            out[b] = best
        return out
else:  # pragma: no cover
    _jacobi_max_numba = None


def jacobi_max_batch(C: np.ndarray, use_numba: bool | None = None) -> np.ndarray:
    """Max-norm of the Jacobiator for each structure tensor in the batch.

    ``C`` has shape ``(batch, n, n, n)`` with ``C[b, i, j, k]`` the coefficient
    of ``e_k`` in ``[e_i, e_j]``; it must be integral.
    """
    C = np.ascontiguousarray(C, dtype=np.int64)
    if C.ndim != 4:
        raise ValueError("expected a (batch, n, n, n) array")
    if C.size and np.abs(C).max() > INT_BOUND:
        raise OverflowError("structure constants too large for the int64 kernel")
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _jacobi_max_numba(C)
    return _jacobi_max_numpy(C)


def backend_name() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
