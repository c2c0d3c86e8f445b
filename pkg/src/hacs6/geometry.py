"""Invariant tensor calculus on a reductive pair.

All tensors live on ``m`` and are stored by components in the m-basis.  Forms are
:class:`KForm` objects (sorted index tuples); everything else is a dense numpy
array indexed ``[a, b, ...]`` by basis positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from . import linalg
from .catalog.model import Model
from .lie import jacobi_defect, equivariance_defect
from .scalar import FLOAT_TOL, array_is_zero, format_scalar, is_zero, max_abs, zeros


class GeometryError(RuntimeError):
    """Internal-consistency failure (a computed tensor violates a structural identity)."""


class DegenerateMetric(ValueError):
    pass


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
            elif seq[i] == seq[j]:
                return 0
    return sign


class KForm:
    """Alternating k-form on an n-dimensional space, stored on increasing index tuples."""

    __slots__ = ("k", "n", "comps", "exact")

    def __init__(self, k: int, n: int, comps: dict | None = None, exact: bool = True):
        if k < 0 or k > n:
            raise ValueError(f"degree {k} out of range for dimension {n}")
        self.k, self.n, self.exact = k, n, exact
        zero = Fraction(0) if exact else 0.0
        self.comps = {I: zero for I in combinations(range(n), k)}
        if comps:
            for I, v in comps.items():
                s = _perm_sign(I)
                if s == 0:
                    if v != 0:
                        raise ValueError("repeated index with nonzero value")
                    continue
                self.comps[tuple(sorted(I))] = s * v

    @classmethod
    def from_matrix(cls, W: np.ndarray) -> "KForm":
        n = W.shape[0]
        exact = W.dtype == object
        return cls(2, n, {(a, b): W[a, b] for a, b in combinations(range(n), 2)}, exact)

    @classmethod
    def from_tensor(cls, T: np.ndarray) -> "KForm":
        """Read the components of an already antisymmetric dense tensor."""
        k, n = T.ndim, T.shape[0]
        return cls(k, n, {I: T[I] for I in combinations(range(n), k)}, T.dtype == object)

    def __getitem__(self, idx):
        s = _perm_sign(idx)
        if s == 0:
            return Fraction(0) if self.exact else 0.0
        return s * self.comps[tuple(sorted(idx))]

    def evaluate(self, *vectors):
        """Value on k vectors: sum over K of comps[K] * det of the K-rows."""
        if len(vectors) != self.k:
            raise ValueError("wrong number of arguments")
        V = np.array(vectors, dtype=object if self.exact else float).T
        total = Fraction(0) if self.exact else 0.0
        for K, a in self.comps.items():
            if a != 0:
                total = total + a * linalg.det(V[list(K), :])
        return total

    def to_tensor(self) -> np.ndarray:
        T = zeros((self.n,) * self.k, self.exact)
        for K, a in self.comps.items():
            if a == 0:
                continue
            for perm in permutations(range(self.k)):
                idx = tuple(K[p] for p in perm)
                T[idx] = _perm_sign(perm) * a
        return T

    def is_zero(self, tol: float = FLOAT_TOL) -> bool:
        return all(is_zero(v, tol) for v in self.comps.values())

    def max_abs(self):
        return max_abs(np.array(list(self.comps.values()), dtype=object if self.exact else float))

    def _combine(self, other, f):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("degree or dimension mismatch")
        out = KForm(self.k, self.n, exact=self.exact)
        out.comps = {I: f(v, other.comps[I]) for I, v in self.comps.items()}
        return out

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rmul__(self, s):
        out = KForm(self.k, self.n, exact=self.exact)
        out.comps = {I: s * v for I, v in self.comps.items()}
        return out

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return isinstance(other, KForm) and (self - other).is_zero()

    __hash__ = None

    def to_json(self) -> dict:
        return {"degree": self.k, "components": {",".join(map(str, I)): format_scalar(v)
                                                 for I, v in self.comps.items() if v != 0}}


# ---------------------------------------------------------------------------
# differentials

def act_on_form(A: np.ndarray, alpha: KForm) -> KForm:
    """Derivation action ``(A.alpha)(x_1..x_k) = -sum alpha(.., A x_s, ..)``."""
    n, k = alpha.n, alpha.k
    out = {}
    for I in alpha.comps:
        total = Fraction(0) if alpha.exact else 0.0
        for s in range(k):
            for l in range(n):
                a = A[l, I[s]]
                if a != 0:
                    J = I[:s] + (l,) + I[s + 1:]
                    total = total - a * alpha[J]
        out[I] = total
    return KForm(k, n, out, alpha.exact)


def is_invariant(model: Model, alpha: KForm) -> bool:
    return all(act_on_form(r, alpha).is_zero(model.tol) for r in model.rep.rho)


def ce_differential(model: Model, alpha: KForm, check: bool = True) -> KForm:
    """Chevalley-Eilenberg differential of an h-invariant form using the projected bracket."""
    if check and not is_invariant(model, alpha):
        raise ValueError("ce_differential needs an h-invariant form")
    k, n = alpha.k, alpha.n
    if k + 1 > n:
        raise ValueError("degree overflow")
    cm = model.cm
    out = {}
    for I in combinations(range(n), k + 1):
        total = Fraction(0) if alpha.exact else 0.0
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                rest = I[:a] + I[a + 1:b] + I[b + 1:]
                sign = -1 if (a + b) % 2 else 1
                for l in range(n):
                    c = cm[I[a], I[b], l]
                    if c != 0:
                        total = total + sign * c * alpha[(l,) + rest]
        out[I] = total
    return KForm(k + 1, n, out, alpha.exact)


def apply_J(model: Model, alpha: KForm) -> KForm:
    """``(J alpha)(x_1..x_k) = alpha(J x_1, .., J x_k)`` via k x k minors of J."""
    J = model.J
    k, n = alpha.k, alpha.n
    out = {}
    nz = [(K, a) for K, a in alpha.comps.items() if a != 0]
    for I in combinations(range(n), k):
        total = Fraction(0) if alpha.exact else 0.0
        for K, a in nz:
            total = total + a * linalg.det(J[np.ix_(K, I)])
        out[I] = total
    return KForm(k, n, out, alpha.exact)


def dJ(model: Model, alpha: KForm) -> KForm:
    return ce_differential(model, apply_J(model, alpha), check=False)


def dJ_power(model: Model, omega: KForm, k: int) -> KForm:
    if omega.k + k > omega.n:
        raise ValueError(f"d_J^{k} of a {omega.k}-form exceeds the top degree {omega.n}")
    out = omega
    for _ in range(k):
        out = dJ(model, out)
    return out


def omega_form(model: Model) -> KForm:
    if model.omega is None:
        raise ValueError(f"{model.case} carries no invariant 2-form")
    return KForm.from_matrix(model.omega)


# ---------------------------------------------------------------------------
# Nijenhuis tensor

def nijenhuis(model: Model) -> np.ndarray:
    """``N[a, b, :] = pi([Je_a, Je_b] - J[e_a, Je_b] - J[Je_a, e_b] - [e_a, e_b])``."""
    J, cm = model.J, model.cm
    t1 = np.einsum("ai,bj,abk->ijk", J, J, cm)
    t2 = np.einsum("bj,ibk->ijk", J, cm)
    t3 = np.einsum("ai,ajk->ijk", J, cm)
    mixed = np.einsum("lk,ijk->ijl", J, t2 + t3)
    return t1 - mixed - cm


DEGENERACY = {0: "ZERO", 2: "DG2", 4: "DG1", 6: "NDG"}


def nijenhuis_rank(N: np.ndarray, tol: float = FLOAT_TOL) -> int:
    n = N.shape[0]
    return linalg.rank(N.reshape(n * n, n), tol)


def degeneracy_class(N: np.ndarray, tol: float = FLOAT_TOL) -> str:
    r = nijenhuis_rank(N, tol)
    if r % 2:
        raise GeometryError(f"Nijenhuis image has odd rank {r}; it must be J-stable")
    return DEGENERACY.get(r, f"rank{r}")


def nijenhuis_symmetry_defect(model: Model, N: np.ndarray):
    """Max-norm of ``N(Jx, y) + J N(x, y)`` and ``N(x, Jy) + J N(x, y)``."""
    J = model.J
    JN = np.einsum("lk,ijk->ijl", J, N)
    a = np.einsum("ai,ajk->ijk", J, N) + JN
    b = np.einsum("bj,ibk->ijk", J, N) + JN
    return max(max_abs(a), max_abs(b))


# ---------------------------------------------------------------------------
# metric geometry

def _metric(model: Model, metric=None) -> np.ndarray:
    G = model.metric if metric is None else metric
    if G is None:
        raise DegenerateMetric(f"{model.case} has no compatible metric")
    if is_zero(linalg.det(G), model.tol):
        raise DegenerateMetric("metric is degenerate")
    return G


@dataclass(frozen=True, eq=False)
class Connection:
    """``L[a, k, b]`` = k-th coordinate of ``Lambda(e_a) e_b``."""
    L: np.ndarray

    def matrix(self, a: int) -> np.ndarray:
        return self.L[a]


def nomizu_connection(model: Model, metric=None) -> Connection:
    G = _metric(model, metric)
    Ginv = linalg.inverse(G)
    cm = model.cm
    # Uv[a, b, c] = g(U(e_a, e_b), e_c)
    t1 = np.einsum("cal,lb->abc", cm, G)
    t2 = np.einsum("cbl,al->abc", cm, G)
    Uv = (t1 + t2) * (Fraction(1, 2) if model.exact else 0.5)
    U = np.einsum("kc,abc->abk", Ginv, Uv)
    half = Fraction(1, 2) if model.exact else 0.5
    lam = cm * half + U
    # lam[a, b, k] -> L[a, k, b]
    return Connection(np.transpose(lam, (0, 2, 1)))


def connection_defects(model: Model, conn: Connection, metric=None) -> dict:
    G = _metric(model, metric)
    L = conn.L
    compat = np.einsum("akb,kc->abc", L, G) + np.einsum("akc,bk->abc", L, G)
    # Lambda(x) y - Lambda(y) x - [x, y]_m
    lam = np.transpose(L, (0, 2, 1))
    tors = lam - np.transpose(lam, (1, 0, 2)) - model.cm
    return {"metric": max_abs(compat), "torsion": max_abs(tors)}


def nabla_omega(model: Model, conn: Connection | None = None, omega=None) -> np.ndarray:
    """``A[a, b, c] = (nabla_{e_a} omega)(e_b, e_c) = -omega(L_a e_b, e_c) - omega(e_b, L_a e_c)``."""
    W = model.omega if omega is None else omega
    if W is None:
        raise ValueError(f"{model.case} carries no invariant 2-form")
    conn = conn or nomizu_connection(model)
    L = conn.L
    return -np.einsum("akb,kc->abc", L, W) - np.einsum("akc,bk->abc", L, W)


@dataclass(frozen=True, eq=False)
class CurvatureData:
    R: np.ndarray      # R[a, b, k, c] = k-th coordinate of R(e_a, e_b) e_c
    ricci: np.ndarray
    scalar: object
    weyl: np.ndarray
    metric: np.ndarray

    def is_flat(self, tol=FLOAT_TOL) -> bool:
        return array_is_zero(self.R, tol)

    def einstein_lambda(self, tol=FLOAT_TOL):
        """``lam`` with ``Ric = lam g`` exactly, or ``None``."""
        G, Ric = self.metric, self.ricci
        n = G.shape[0]
        a, b = next((a, b) for a in range(n) for b in range(n) if not is_zero(G[a, b], tol))
        lam = Ric[a, b] / G[a, b]
        if array_is_zero(Ric - lam * G, tol):
            return lam
        return None

    def weyl_is_zero(self, tol=FLOAT_TOL) -> bool:
        return array_is_zero(self.weyl, tol)


def kulkarni_nomizu(h: np.ndarray, k: np.ndarray) -> np.ndarray:
    return (np.einsum("xw,yz->xyzw", h, k) + np.einsum("yz,xw->xyzw", h, k)
            - np.einsum("xz,yw->xyzw", h, k) - np.einsum("yw,xz->xyzw", h, k))


def curvature(model: Model, metric=None, conn: Connection | None = None) -> CurvatureData:
    G = _metric(model, metric)
    conn = conn or nomizu_connection(model, G)
    L = conn.L
    n = model.nm
    rho = model.rep.rho
    cm, ch = model.cm, model.ch
    LL = np.einsum("akl,blc->abkc", L, L)
    R = LL - np.transpose(LL, (1, 0, 2, 3))
    R = R - np.einsum("abl,lkc->abkc", cm, L)
    if model.nh:
        R = R - np.einsum("abs,skc->abkc", ch, rho)
    ricci = np.einsum("abac->bc", R)
    Ginv = linalg.inverse(G)
    s = np.sum(Ginv * ricci.T)
    Rl = np.einsum("xykz,kw->xyzw", R, G)
    if n > 2:
        if model.exact:
            P = (ricci - s * G / (2 * (n - 1))) / (n - 2)
        else:
            P = (ricci - s * G / (2.0 * (n - 1))) / (n - 2.0)
        weyl = Rl - kulkarni_nomizu(P, G)
    else:
        weyl = zeros(Rl.shape, model.exact)
    return CurvatureData(R, ricci, s, weyl, G)


def codifferential(model: Model, alpha: np.ndarray | None = None, metric=None) -> np.ndarray:
    """``delta omega(x) = -sum g^{ab} (nabla_{e_a} omega)(e_b, x)``."""
    G = _metric(model, metric)
    A = nabla_omega(model) if alpha is None else alpha
    Ginv = linalg.inverse(G)
    return -np.einsum("ab,abx->x", Ginv, A)


def _alternation(A: np.ndarray) -> np.ndarray:
    total = zeros(A.shape, A.dtype == object)
    for perm in permutations(range(3)):
        total = total + _perm_sign(perm) * np.transpose(A, perm)
    return total / 6 if A.dtype == object else total / 6.0


def gh_components(model: Model, alpha: np.ndarray | None = None) -> dict[int, np.ndarray]:
    """Split ``nabla omega`` into its four Gray-Hervella components."""
    G = _metric(model)
    J = model.J
    A = nabla_omega(model) if alpha is None else alpha
    tol = model.tol
    # membership in the space W: skew in the last pair and J-anti-invariant there
    skew = A + np.transpose(A, (0, 2, 1))
    janti = A + np.einsum("bi,cj,abc->aij", J, J, A)
    if not (array_is_zero(skew, tol) and array_is_zero(janti, tol)):
        raise GeometryError("nabla omega does not lie in the Gray-Hervella space")
    half = Fraction(1, 2) if model.exact else 0.5
    sigma = np.einsum("ai,bj,abc->ijc", J, J, A)
    minus = (A - sigma) * half
    plus = (A + sigma) * half
    c1 = _alternation(minus)
    c2 = minus - c1
    d = codifferential(model, A)
    quarter = Fraction(1, 4) if model.exact else 0.25
    GJ = G @ J                         # GJ[x, y] = g(x, J y)
    dJv = d @ J                        # dJv[z] = delta(J z)
    c4 = -quarter * (np.einsum("xy,z->xyz", G, d) - np.einsum("xz,y->xyz", G, d)
                     - np.einsum("xy,z->xyz", GJ, dJv) + np.einsum("xz,y->xyz", GJ, dJv))
    c3 = plus - c4
    return {1: c1, 2: c2, 3: c3, 4: c4}


def gh_class(model: Model) -> list[int]:
    comps = gh_components(model)
    return [i for i in (1, 2, 3, 4) if not array_is_zero(comps[i], model.tol)]


def is_totally_skew(A: np.ndarray, tol: float = FLOAT_TOL) -> bool:
    return (array_is_zero(A + np.transpose(A, (1, 0, 2)), tol)
            and array_is_zero(A + np.transpose(A, (0, 2, 1)), tol))


def snk_check(model: Model) -> bool:
    """Nonzero, totally skew ``nabla omega`` equal to ``d omega / 3``; both tests must agree."""
    A = nabla_omega(model)
    tol = model.tol
    if array_is_zero(A, tol):
        return False
    skew = is_totally_skew(A, tol)
    dw = ce_differential(model, omega_form(model)).to_tensor()
    third = Fraction(1, 3) if model.exact else 1.0 / 3.0
    matches = array_is_zero(A - dw * third, tol)
    if skew != matches:
        raise GeometryError("total skewness and the d omega / 3 identity disagree")
    return skew


def is_kahler(model: Model) -> bool:
    return array_is_zero(nabla_omega(model), model.tol)


# ---------------------------------------------------------------------------
# report

def _fmt(v):
    return None if v is None else format_scalar(v)


def cosmological_constant(lam, n: int = 6):
    """Field-equation constant for Ric = lam g: Ric - scal/2 g + Lambda g = 0 gives (n-2) lam / 2."""
    if lam is None:
        return None
    return lam * (n - 2) / 2


def report(model: Model) -> dict:
    """Full geometry record for one (model, J, omega) triple."""
    tol = model.tol
    jd, _ = jacobi_defect(model.g, tol)
    eq = equivariance_defect(model.rep, model.g.c[: model.nm, : model.nm, :])
    N = nijenhuis(model)
    cls = degeneracy_class(N, tol)
    out = {
        "case": model.case,
        "params": model.params.to_json()["params"],
        "mode": "exact" if model.exact else "float",
        "jacobi": is_zero(jd, tol),
        "equivariant": is_zero(eq, tol),
        "nijenhuis_class": cls,
        "d_omega_zero": None, "dJ2_zero": None, "dJ3_zero": None, "dJ4_zero": None,
        "kahler": None, "snk": None, "skt": None, "einstein_lambda": None, "cosmological_constant": None,
        "weyl_zero": None, "gh_class": None, "signature": None,
    }
    if model.omega is None:
        return out
    w = omega_form(model)
    out["d_omega_zero"] = ce_differential(model, w).is_zero(tol)
    powers = [w]
    for _ in range(4):
        powers.append(dJ(model, powers[-1]))
    out["dJ2_zero"], out["dJ3_zero"], out["dJ4_zero"] = (powers[k].is_zero(tol) for k in (2, 3, 4))
    out["skt"] = cls == "ZERO" and out["dJ2_zero"]
    if model.metric is None:
        return out
    G = model.metric
    out["signature"] = list(linalg.sym_signature(G, tol))
    if is_zero(linalg.det(G), tol):
        return out
    conn = nomizu_connection(model)
    A = nabla_omega(model, conn)
    out["kahler"] = array_is_zero(A, tol)
    out["snk"] = snk_check(model)
    cur = curvature(model, conn=conn)
    lam = cur.einstein_lambda(tol)
    out["einstein_lambda"] = _fmt(lam)
    out["cosmological_constant"] = _fmt(cosmological_constant(lam, model.nm))
    out["weyl_zero"] = cur.weyl_is_zero(tol)
    out["gh_class"] = gh_class(model)
    return out
