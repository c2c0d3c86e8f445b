"""Dense linear algebra over the exact field, with float counterparts.

Exact routines take numpy object arrays and never round.  Float routines are
used when an array has a floating dtype and decide rank with an SVD cutoff.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalar import FLOAT_TOL, zeros


def _sparse_rows(M: np.ndarray):
    for row in M:
        yield {c: v for c, v in enumerate(row) if v != 0}


def rref_sparse(rows, ncols: int) -> dict[int, dict[int, object]]:
    """Incremental reduced row echelon form.

    ``rows`` is an iterable of ``{col: value}`` dicts.  Returns ``{pivot_col: row}``
    where each row has a unit entry at its pivot and zeros at every other pivot.
    """
    pivots: dict[int, dict[int, object]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v != 0}
        for c in [c for c in r if c in pivots]:
            v = r.get(c)
            if not v:
                continue
            for cc, pv in pivots[c].items():
                nv = r.get(cc, 0) - v * pv
                if nv == 0:
                    r.pop(cc, None)
                else:
                    r[cc] = nv
        if not r:
            continue
        pc = min(r)
        inv = 1 / r[pc] if not isinstance(r[pc], int) else Fraction(1, r[pc])
        r = {c: v * inv for c, v in r.items()}
        r[pc] = Fraction(1)
        for other in pivots.values():
            v = other.get(pc)
            if v:
                for cc, pv in r.items():
                    nv = other.get(cc, 0) - v * pv
                    if nv == 0:
                        other.pop(cc, None)
                    else:
                        other[cc] = nv
        pivots[pc] = r
        if len(pivots) == ncols:
            break
    return pivots


def _kernel_from_pivots(pivots, ncols: int) -> list[np.ndarray]:
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = zeros(ncols)
        v[f] = Fraction(1)
        for pc, row in pivots.items():
            val = row.get(f)
            if val:
                v[pc] = -val
        out.append(v)
    return out


def kernel_rows(rows, ncols: int) -> list[np.ndarray]:
    """Null space of the system given as sparse rows (exact)."""
    return _kernel_from_pivots(rref_sparse(rows, ncols), ncols)


def _float_kernel(M: np.ndarray, tol: float) -> list[np.ndarray]:
    M = np.asarray(M, dtype=float)
    n = M.shape[1]
    if M.shape[0] == 0:
        return [e for e in np.eye(n)]
    _, s, vt = np.linalg.svd(M)
    scale = max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > tol * scale))
    return [vt[i] for i in range(rank, n)]


def mat_kernel(M: np.ndarray, tol: float = FLOAT_TOL) -> list[np.ndarray]:
    """Basis of the null space of ``M``; exact for object arrays."""
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError("matrix expected")
    if M.dtype != object:
        return _float_kernel(M, tol)
    return kernel_rows(_sparse_rows(M), M.shape[1])


def rank(M: np.ndarray, tol: float = FLOAT_TOL) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    if M.dtype != object:
        s = np.linalg.svd(np.asarray(M, dtype=float), compute_uv=False)
        return int(np.sum(s > tol * max(1.0, s[0])))
    return len(rref_sparse(_sparse_rows(M), M.shape[1]))


def row_space(vectors, ncols: int) -> list[dict]:
    """Reduced basis of the span of ``vectors`` (exact)."""
    return list(rref_sparse(({c: v for c, v in enumerate(vec) if v != 0} for vec in vectors), ncols).values())


def solve(A: np.ndarray, b: np.ndarray):
    """A particular solution of ``A x = b`` or ``None`` if inconsistent (exact)."""
    A = np.asarray(A)
    n = A.shape[1]
    aug = np.concatenate([A, np.asarray(b, dtype=A.dtype).reshape(-1, 1)], axis=1)
    if A.dtype != object:
        x, *_ = np.linalg.lstsq(np.asarray(A, float), np.asarray(b, float), rcond=None)
        if np.max(np.abs(np.asarray(A, float) @ x - b), initial=0.0) > FLOAT_TOL * max(1.0, np.max(np.abs(b), initial=0.0)):
            return None
        return x
    pivots = rref_sparse(_sparse_rows(aug), n + 1)
    if n in pivots:
        return None
    x = zeros(n)
    for pc, row in pivots.items():
        x[pc] = row.get(n, Fraction(0))
    return x


def inverse(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A)
    n = A.shape[0]
    if A.dtype != object:
        return np.linalg.inv(np.asarray(A, float))
    aug = np.concatenate([A, np.eye(n, dtype=int).astype(object)], axis=1)
    pivots = rref_sparse(_sparse_rows(aug), 2 * n)
    if any(c not in pivots for c in range(n)):
        raise ZeroDivisionError("singular matrix")
    out = zeros((n, n))
    for r in range(n):
        row = pivots[r]
        for c in range(n):
            out[r, c] = row.get(n + c, Fraction(0))
    return out


def det(A: np.ndarray):
    A = np.asarray(A)
    n = A.shape[0]
    if n == 0:
        return Fraction(1)
    if A.dtype != object:
        return float(np.linalg.det(np.asarray(A, float)))
    M = [list(row) for row in A]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            sign = -sign
        p = M[col][col]
        result = result * p
        for r in range(col + 1, n):
            f = M[r][col]
            if f != 0:
                f = f / p
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return sign * result


def sym_signature(G: np.ndarray, tol: float = FLOAT_TOL) -> tuple[int, int, int]:
    """Sylvester signature ``(positive, negative, null)`` of a symmetric matrix.

    Exact input is diagonalized by symmetric (congruence) elimination.
    """
    G = np.asarray(G)
    n = G.shape[0]
    if G.dtype != object:
        w = np.linalg.eigvalsh(np.asarray(G, float))
        scale = max(1.0, float(np.max(np.abs(w), initial=0.0)))
        p = int(np.sum(w > tol * scale))
        q = int(np.sum(w < -tol * scale))
        return p, q, n - p - q
    A = [list(row) for row in G]
    active = list(range(n))
    p = q = 0
    while active:
        i = next((a for a in active if A[a][a] != 0), None)
        if i is None:
            pair = next(((a, b) for a in active for b in active if a != b and A[a][b] != 0), None)
            if pair is None:
                break
            a, b = pair
            # e_a -> e_a + e_b makes the (a, a) entry 2*A[a][b] != 0
            for k in range(n):
                A[a][k] = A[a][k] + A[b][k]
            for k in range(n):
                A[k][a] = A[k][a] + A[k][b]
            continue
        d = A[i][i]
        if d > 0:
            p += 1
        else:
            q += 1
        active.remove(i)
        for r in active:
            f = A[r][i]
            if f != 0:
                f = f / d
                for c in active:
                    A[r][c] = A[r][c] - f * A[i][c]
        for r in active:
            A[r][i] = A[i][r] = 0
    return p, q, n - p - q


def independent_subset(vectors, ncols: int) -> list[int]:
    """Indices of a maximal linearly independent subset (greedy, exact)."""
    keep = []
    pivots: dict = {}
    for idx, vec in enumerate(vectors):
        before = len(pivots)
        pivots = rref_sparse(list(pivots.values()) + [{c: v for c, v in enumerate(vec) if v != 0}], ncols)
        if len(pivots) > before:
            keep.append(idx)
    return keep


def coordinates(basis_vectors, v):
    """Coordinates of ``v`` in the given basis, or ``None`` if outside the span."""
    B = np.array(basis_vectors, dtype=object).T if basis_vectors else zeros((len(v), 0))
    if len(basis_vectors) == 0:
        return np.array([], dtype=object) if all(x == 0 for x in v) else None
    return solve(B, np.asarray(v, dtype=object))
