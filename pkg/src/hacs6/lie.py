"""Structure-constant Lie algebras and invariant linear algebra.

Everything here reduces to kernels of stacked linear constraint systems:
derivations, centers, invariant tensors.  Arrays use the convention
``c[i, j, k]`` = coefficient of ``e_k`` in ``[e_i, e_j]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .scalar import FLOAT_TOL, array_is_zero, format_scalar, is_zero, max_abs, parse_scalar, zeros


@dataclass(frozen=True, eq=False)
class LieAlg:
    c: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        n = self.c.shape[0]
        if self.c.shape != (n, n, n):
            raise ValueError("structure constants must have shape (n, n, n)")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(n)))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @property
    def exact(self) -> bool:
        return self.c.dtype == object

    def bracket(self, u, v) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.c)

    def ad(self, u) -> np.ndarray:
        """Matrix of ``ad_u`` acting on column coordinate vectors."""
        return np.einsum("i,ijk->kj", u, self.c)

    def ad_basis(self) -> np.ndarray:
        # ads[i] = matrix of ad_{e_i}
        return np.transpose(self.c, (0, 2, 1))

    def is_antisymmetric(self) -> bool:
        return array_is_zero(self.c + np.transpose(self.c, (1, 0, 2)))

    def to_json(self) -> dict:
        n = self.dim
        entries = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = self.c[i, j, k]
                    if i < j and not is_zero(v):
                        entries.append([i, j, k, format_scalar(v)])
        return {"dim": n, "basis": list(self.labels), "c": entries}

    @classmethod
    def from_json(cls, obj: dict, exact: bool = True) -> "LieAlg":
        n = int(obj["dim"])
        c = zeros((n, n, n), exact)
        for i, j, k, v in obj["c"]:
            val = parse_scalar(v) if exact else float(parse_scalar(v))
            c[i, j, k] = val
            c[j, i, k] = -val
        return cls(c, tuple(obj.get("basis", ())))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def abelian(n: int, exact: bool = True) -> LieAlg:
    return LieAlg(zeros((n, n, n), exact))


def from_brackets(n: int, brackets: dict, labels=(), exact: bool = True) -> LieAlg:
    """Build from ``{(i, j): {k: value}}`` for ``i < j``."""
    c = zeros((n, n, n), exact)
    for (i, j), out in brackets.items():
        for k, v in out.items():
            c[i, j, k] += v
            c[j, i, k] -= v
    return LieAlg(c, tuple(labels))


def jacobiator(L: LieAlg) -> np.ndarray:
    c = L.c
    T = np.einsum("jlk,ikm->ijlm", c, c)
    return T + np.transpose(T, (2, 0, 1, 3)) + np.transpose(T, (1, 2, 0, 3))


def jacobi_defect(L: LieAlg, tol: float = FLOAT_TOL):
    """Return ``(max-norm of the Jacobiator, violating basis triples)``."""
    jac = jacobiator(L)
    n = L.dim
    bad = []
    for i, j, l in combinations(range(n), 3):
        v = jac[i, j, l]
        if not array_is_zero(v, tol):
            bad.append((i, j, l))
    return max_abs(jac), bad


@dataclass(frozen=True, eq=False)
class Rep:
    """Action of a Lie algebra ``h`` on a vector space ``m``.

    ``rho[a]`` is the matrix of the basis element ``a`` of ``h``.
    """
    h: LieAlg
    rho: np.ndarray

    @property
    def dim(self) -> int:
        return self.rho.shape[1]

    def homomorphism_defect(self):
        worst = None
        for a in range(self.h.dim):
            for b in range(self.h.dim):
                lhs = np.einsum("k,kij->ij", self.h.c[a, b], self.rho)
                rhs = self.rho[a] @ self.rho[b] - self.rho[b] @ self.rho[a]
                d = max_abs(lhs - rhs)
                worst = d if worst is None or d > worst else worst
        return worst if worst is not None else Fraction(0)

    def restrict(self, idx) -> "Rep":
        idx = list(idx)
        return Rep(self.h, self.rho[:, idx][:, :, idx])


def equivariance_defect(rep: Rep, B: np.ndarray):
    """Max-norm of ``a.B(x, y) - B(a.x, y) - B(x, a.y)`` over basis elements.

    ``B`` has shape ``(m, m, m + h)``: values live in ``m`` (first block) then
    ``h``, where ``h`` acts on itself by the adjoint action.
    """
    nm = rep.dim
    nh = rep.h.dim
    worst = Fraction(0) if B.dtype == object else 0.0
    ad_h = rep.h.ad_basis()
    for a in range(nh):
        act = zeros((nm + nh, nm + nh), B.dtype == object)
        act[:nm, :nm] = rep.rho[a]
        act[nm:, nm:] = ad_h[a]
        lhs = np.einsum("kt,xyt->xyk", act, B)
        rhs = np.einsum("tx,tyk->xyk", rep.rho[a], B) + np.einsum("ty,xtk->xyk", rep.rho[a], B)
        d = max_abs(lhs - rhs)
        if d > worst:
            worst = d
    return worst


def _derivation_rows(c: np.ndarray, pairs, tol: float) -> list[dict]:
    """Linear constraints ``A(e_i e_j) = (A e_i) e_j + e_i (A e_j)`` on ``A[k, m]``."""
    n = c.shape[0]
    rows = []
    for i, j in pairs:
        for k in range(n):
            row: dict[int, object] = {}
            for m in range(n):
                v = c[i, j, m]
                if not is_zero(v, tol):
                    row[k * n + m] = row.get(k * n + m, 0) + v
            for p in range(n):
                v = c[p, j, k]
                if not is_zero(v, tol):
                    row[p * n + i] = row.get(p * n + i, 0) - v
                v = c[i, p, k]
                if not is_zero(v, tol):
                    row[p * n + j] = row.get(p * n + j, 0) - v
            if row:
                rows.append(row)
    return rows


def _solve_sparse(rows, N: int, exact: bool, tol: float) -> list[np.ndarray]:
    if exact:
        return linalg.kernel_rows(rows, N)
    dense = np.zeros((max(len(rows), 1), N))
    for r, row in enumerate(rows):
        for col, v in row.items():
            dense[r, col] += float(v)
    return linalg.mat_kernel(dense, tol)


def algebra_derivations(c: np.ndarray, tol: float = FLOAT_TOL) -> list[np.ndarray]:
    """Derivations of an arbitrary (not necessarily anticommutative) algebra.

    ``c[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
    """
    n = c.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    sols = _solve_sparse(_derivation_rows(c, pairs, tol), n * n, c.dtype == object, tol)
    return [v.reshape(n, n) for v in sols]


def derivations(L: LieAlg, commute_with=None, tol: float = FLOAT_TOL) -> list[np.ndarray]:
    """Basis of ``{A : A[x,y] = [Ax,y] + [x,Ay]}``, optionally with ``AJ = JA``.

    Each basis element is returned as an ``n x n`` matrix acting on columns.
    """
    n = L.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = _derivation_rows(L.c, pairs, tol)
    if commute_with is not None:
        J = commute_with
        for a in range(n):
            for b in range(n):
                # (AJ - JA)[a, b] = sum_m A[a, m] J[m, b] - J[a, m] A[m, b]
                row = {}
                for m in range(n):
                    if not is_zero(J[m, b], tol):
                        row[a * n + m] = row.get(a * n + m, 0) + J[m, b]
                    if not is_zero(J[a, m], tol):
                        row[m * n + b] = row.get(m * n + b, 0) - J[a, m]
                if row:
                    rows.append(row)
    sols = _solve_sparse(rows, n * n, L.exact, tol)
    return [v.reshape(n, n) for v in sols]


def killing_form(L: LieAlg) -> np.ndarray:
    ads = L.ad_basis()
    n = L.dim
    K = zeros((n, n), L.exact)
    for i in range(n):
        for j in range(i, n):
            v = np.trace(ads[i] @ ads[j])
            K[i, j] = v
            K[j, i] = v
    return K


def center(L: LieAlg, tol: float = FLOAT_TOL) -> list[np.ndarray]:
    n = L.dim
    # x in center iff sum_i x_i c[i, j, k] = 0 for all j, k
    M = np.transpose(L.c, (1, 2, 0)).reshape(n * n, n)
    return linalg.mat_kernel(M, tol)


def derived_algebra_dim(L: LieAlg) -> int:
    n = L.dim
    return linalg.rank(L.c.reshape(n * n, n))


def subspace_dim(vectors, n: int) -> int:
    if not vectors:
        return 0
    return linalg.rank(np.array(vectors))


def derived_series_dims(L: LieAlg) -> list[int]:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... until stable."""
    n = L.dim
    current = [v for v in np.eye(n, dtype=int).astype(object)] if L.exact else list(np.eye(n))
    dims = [n]
    while True:
        prods = [L.bracket(u, v) for u, v in combinations(current, 2)]
        if not prods:
            dims.append(0)
            break
        M = np.array(prods)
        r = linalg.rank(M)
        if r == dims[-1]:
            break
        dims.append(r)
        if r == 0:
            break
        if L.exact:
            current = [np.array([row.get(c, Fraction(0)) for c in range(n)], dtype=object)
                       for row in linalg.row_space(prods, n)]
        else:
            _, s, vt = np.linalg.svd(M)
            current = list(vt[:r])
    return dims


def commutator_bracket_closed(mats: list[np.ndarray], tol: float = FLOAT_TOL) -> bool:
    """True iff the span of the matrices is closed under commutators."""
    if not mats:
        return True
    n = mats[0].size
    basis_rows = [m.reshape(-1) for m in mats]
    r0 = linalg.rank(np.array(basis_rows))
    for a, b in combinations(mats, 2):
        comm = (a @ b - b @ a).reshape(-1)
        if linalg.rank(np.array(basis_rows + [comm])) > r0:
            return False
    return True


# ---------------------------------------------------------------------------
# invariant tensors

_KINDS = ("sym2", "alt2", "end", "end_J", "sym2_J", "alt2_J")


def _ambient_basis(n: int, kind: str, exact: bool) -> list[np.ndarray]:
    one = Fraction(1) if exact else 1.0
    out = []
    if kind.startswith("sym2"):
        for i in range(n):
            for j in range(i, n):
                M = zeros((n, n), exact)
                M[i, j] = one
                M[j, i] = one
                out.append(M)
    elif kind.startswith("alt2"):
        for i, j in combinations(range(n), 2):
            M = zeros((n, n), exact)
            M[i, j] = one
            M[j, i] = -one
            out.append(M)
    else:
        for i in range(n):
            for j in range(n):
                M = zeros((n, n), exact)
                M[i, j] = one
                out.append(M)
    return out


def invariant_tensors(rep: Rep, kind: str, J=None, tol: float = FLOAT_TOL) -> list[np.ndarray]:
    """Basis of ``h``-invariant tensors of the given kind.

    ``kind``: ``sym2``, ``alt2`` (bilinear forms), ``end`` (endomorphisms), and the
    ``_J`` variants adding ``B(Jx, Jy) = B(x, y)`` or ``EJ = JE``.
    Nondegeneracy is not imposed.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown tensor kind {kind!r}; expected one of {_KINDS}")
    if kind.endswith("_J") and J is None:
        raise ValueError(f"{kind} needs a complex structure J")
    n = rep.dim
    exact = rep.rho.dtype == object
    amb = _ambient_basis(n, kind, exact)
    is_form = not kind.startswith("end")

    def constraints(T):
        out = []
        for a in range(rep.h.dim):
            r = rep.rho[a]
            out.append(r.T @ T + T @ r if is_form else r @ T - T @ r)
        if kind.endswith("_J"):
            out.append(J.T @ T @ J - T if is_form else T @ J - J @ T)
        return np.concatenate([x.reshape(-1) for x in out])

    cols = [constraints(T) for T in amb]
    M = np.array(cols).T
    ker = linalg.mat_kernel(M, tol)
    return [sum((v[i] * amb[i] for i in range(len(amb)) if not is_zero(v[i], tol)), zeros((n, n), exact))
            for v in ker]


def is_invariant_form(rep: Rep, B: np.ndarray, tol: float = FLOAT_TOL) -> bool:
    return all(array_is_zero(r.T @ B + B @ r, tol) for r in rep.rho)


def has_nondegenerate_member(forms: list[np.ndarray], trials: int = 4) -> bool:
    """Whether some linear combination of the forms is nondegenerate.

    Evaluates the determinant at a few fixed integer points; a nonzero
    polynomial of degree <= n cannot vanish at all of them for generic choices.
    """
    if not forms:
        return False
    exact = forms[0].dtype == object
    for t in range(trials):
        coeffs = [(t + 2) ** (i + 1) + i * t + 1 for i in range(len(forms))]
        G = sum((c * f for c, f in zip(coeffs, forms)), zeros(forms[0].shape, exact))
        d = linalg.det(G)
        if not is_zero(d):
            return True
    return False


def transport(L: LieAlg, P: np.ndarray) -> LieAlg:
    """Structure constants after the basis change ``x -> P x``.

    Returns ``L'`` with ``[Px, Py]' = P[x, y]``.
    """
    Pinv = linalg.inverse(P)
    c = np.einsum("ai,bj,ijk,ck->abc", Pinv.T, Pinv.T, L.c, P)
    return LieAlg(c, L.labels)
