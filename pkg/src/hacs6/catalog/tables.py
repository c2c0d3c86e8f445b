"""Builders for the tabulated reductive pairs.

Three families share one assembly routine:

* ``V + C`` over (split) quaternions: ``h = Im H_eps`` acting on ``V = H_eps`` by left
  multiplication, with brackets of the ansatz
  ``[x, y] = lam Im(x y*) + w_b(x, y) e + w_c(x, y) ie``, ``[x, e] = x a_e``,
  ``[x, ie] = x a_ie``, ``[e, ie] = eps e``.
* ``ad + ad`` (two copies of the adjoint module of ``su(2)`` or ``su(1,1)``).
* ``sl2(C)`` isotropy on ``C^2 + C`` or on its own adjoint module.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..lie import LieAlg, killing_form
from ..quaternion import GQuat, basis
from .model import Model, assemble
from .params import ModelParams, quat_algebra

V_LABELS = ("1", "i", "j", "k", "e", "ie")
H_LABELS = ("h_i", "h_j", "h_k")


def omega_forms(b: GQuat, side: str = "left", exact: bool = True) -> np.ndarray:
    """Gram matrix of ``Re(x b y*)`` (``side='left'``) or ``Re(x y* b)`` (``'right'``) on V."""
    if b.w != 0:
        raise ValueError("omega_forms needs an imaginary quaternion b")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    units = basis(b.eps, like=Fraction(1) if exact else 1.0)
    out = np.empty((4, 4), dtype=object if exact else float)
    for i, x in enumerate(units):
        for j, y in enumerate(units):
            v = (x * b * y.conj()) if side == "left" else (x * y.conj() * b)
            out[i, j] = v.w
    return out


def _re_form(x: GQuat, b: GQuat, y: GQuat):
    return (x * b * y.conj()).w


def vc_model(params: ModelParams, lam, bq: GQuat | None, cq: GQuat | None,
             a_e: GQuat | None, a_ie: GQuat | None, eps_br, notes=()) -> Model:
    eps_alg = quat_algebra(params.case)
    zero, one = params.zero, params.one
    units = basis(eps_alg, like=one)
    hunits = units[1:]
    nm, nh = 6, 3

    def vec():
        return [zero] * (nm + nh)

    def hh(a, b):
        out = vec()
        comm = hunits[a].commutator(hunits[b])
        out[nm:] = [comm.x, comm.y, comm.z]
        return out

    def hm(a, j):
        out = vec()
        if j < 4:
            out[:4] = list((hunits[a] * units[j]).coords)
        return out

    def mm(i, j):
        out = vec()
        if j < 4:
            x, y = units[i], units[j]
            if lam:
                im = (x * y.conj())
                out[nm:] = [lam * im.x, lam * im.y, lam * im.z]
            if bq is not None:
                out[4] = _re_form(x, bq, y)
            if cq is not None:
                out[5] = _re_form(x, cq, y)
        elif i < 4:
            a = a_e if j == 4 else a_ie
            if a is not None:
                out[:4] = list((units[i] * a).coords)
        else:
            out[4] = eps_br
        return out

    q = params.q
    J = [[zero] * nm for _ in range(nm)]
    for j in range(4):
        for k, v in enumerate((units[j] * q).coords):
            J[k][j] = v
    J[5][4] = one
    J[4][5] = -one
    b = params.omega_b()
    W = [[zero] * nm for _ in range(nm)]
    for i in range(4):
        for j in range(4):
            W[i][j] = _re_form(units[i], b, units[j])
    W[4][5] = one
    W[5][4] = -one
    return assemble(params, nm, nh, hh, hm, mm, V_LABELS + H_LABELS, J, W, notes)


def _delta0(r) -> int:
    return 1 if r == 0 else 0


def build_vc_row(params: ModelParams) -> Model:
    case = params.case
    eps_alg = quat_algebra(case)
    zero, one = params.zero, params.one
    i = GQuat(zero, one, zero, zero, eps_alg)

    def real(s):
        return GQuat(s, zero, zero, zero, eps_alg)

    P = params
    if case == "A1.1":
        return vc_model(P, 0, i * P.alpha, None, None, real(P.eps / 2 if P.exact else P.eps * 0.5) + i * P.r, P.eps)
    if case == "A1.2":
        return vc_model(P, 0, i, P.p, None, None, zero)
    if case == "A1.3":
        return vc_model(P, 0, None, None, real(P.alpha), real(P.beta) + i * P.r, P.eps)
    if case == "A1.4":
        return vc_model(P, P.eps, i, None, i * (3 * P.eps), None, zero)
    if case == "A3.1":
        half = P.eps / 2 if P.exact else P.eps * 0.5
        return vc_model(P, 0, P.p, None, None, real(half) + P.p * P.r, P.eps)
    if case == "A3.2":
        shift = P.eps + P.alpha * _delta0(P.r)
        return vc_model(P, 0, P.p, None, P.p * P.r, real(shift) + P.u, P.eps)
    if case == "A3.3":
        return vc_model(P, 0, P.p, P.u, None, None, zero)
    if case == "A3.4":
        return vc_model(P, 0, None, None, real(P.alpha) + P.p, real(P.beta) + P.u, P.eps)
    if case == "A3.5":
        small_eps = -(P.p * P.p).w
        return vc_model(P, one, P.p, None, P.p * (3 * small_eps), None, zero)
    raise ValueError(case)


# ---------------------------------------------------------------------------
# two copies of the adjoint module

AD_RULES = {
    # (copy of x, copy of y) -> list of (sign, output copy)
    "1": {(0, 0): [(1, 0)], (1, 1): [(1, 1)]},
    "2": {(0, 0): [(1, 0)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(-1, 0)]},
    "3": {(0, 0): [(1, 0)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]},
    "4": {(0, 0): [(1, 1)]},
}


def simple_part(eps_alg: int, exact: bool = True) -> LieAlg:
    """``su(2)`` (eps=-1) or ``su(1,1)`` (eps=+1) as imaginary quaternions with the commutator."""
    units = basis(eps_alg, like=Fraction(1) if exact else 1.0)[1:]
    c = np.empty((3, 3, 3), dtype=object if exact else float)
    for a in range(3):
        for b in range(3):
            comm = units[a].commutator(units[b])
            c[a, b] = [comm.x, comm.y, comm.z]
    return LieAlg(c, ("i", "j", "k"))


def j_rt(r, t, n: int, exact: bool):
    """Block matrix ``[[r, -(1+r^2)/t], [t, -r]]`` tensored with the identity of size n."""
    one = Fraction(1) if exact else 1.0
    s = -(one + r * r) / t
    J = [[0 * one] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        J[a][a] = r
        J[a][n + a] = s
        J[n + a][a] = t
        J[n + a][n + a] = -r
    return J


def build_ad_row(params: ModelParams) -> Model:
    case = params.case
    eps_alg = quat_algebra(case)
    exact = params.exact
    zero, one = params.zero, params.one
    h = simple_part(eps_alg, exact)
    rule = AD_RULES[case[-1]]
    nm, nh = 6, 3

    def vec():
        return [zero] * (nm + nh)

    def hh(a, b):
        out = vec()
        out[nm:] = list(h.c[a, b])
        return out

    def hm(a, j):
        out = vec()
        copy, idx = divmod(j, 3)
        out[3 * copy: 3 * copy + 3] = list(h.c[a, idx])
        return out

    def mm(i, j):
        out = vec()
        ci, xi = divmod(i, 3)
        cj, xj = divmod(j, 3)
        for sign, dest in rule.get((ci, cj), []):
            for k in range(3):
                out[3 * dest + k] += sign * h.c[xi, xj, k]
        return out

    J = j_rt(params.r, params.t, 3, exact)
    K = killing_form(h)
    W = [[zero] * nm for _ in range(nm)]
    # omega(x, y) = (K + K)(J0 x, y), J0(u, v) = (-v, u)
    for a in range(3):
        for b in range(3):
            W[3 + a][b] = -K[a, b]
            W[a][3 + b] = K[a, b]
    labels = tuple(f"{n}{s}" for s in ("1", "2") for n in "ijk") + H_LABELS
    return assemble(params, nm, nh, hh, hm, mm, labels, J, W)


# ---------------------------------------------------------------------------
# sl2(C) isotropy

def _cx(re, im=0) -> GQuat:
    return GQuat(re, im, 0 * re, 0 * re, -1)


def sl2c(exact: bool = True) -> LieAlg:
    """Real form of sl2(C) in the basis E, F, H, iE, iF, iH."""
    one = Fraction(1) if exact else 1.0
    zero = 0 * one
    # complex structure constants of E, F, H
    cc = {(0, 1): {2: one}, (2, 0): {0: 2 * one}, (2, 1): {1: -2 * one}}
    c = np.empty((6, 6, 6), dtype=object if exact else float)
    c.fill(zero)
    for (a, b), out in cc.items():
        for k, v in out.items():
            for pa in range(2):
                for pb in range(2):
                    # (i^pa X_a, i^pb X_b) -> i^(pa+pb) v X_k
                    pw = pa + pb
                    sign = -1 if pw == 2 else 1
                    dest = k + 3 * (pw % 2)
                    c[a + 3 * pa, b + 3 * pb, dest] += sign * v
                    c[b + 3 * pb, a + 3 * pa, dest] -= sign * v
    return LieAlg(c, ("E", "F", "H", "iE", "iF", "iH"))


def _sl2_matrices(exact: bool):
    one = Fraction(1) if exact else 1.0
    z = 0 * one
    E = [[_cx(z), _cx(one)], [_cx(z), _cx(z)]]
    F = [[_cx(z), _cx(z)], [_cx(one), _cx(z)]]
    H = [[_cx(one), _cx(z)], [_cx(z), _cx(-one)]]
    iu = _cx(z, one)
    mats = [E, F, H]
    mats += [[[iu * v for v in row] for row in M] for M in (E, F, H)]
    return mats


def _cvec_from_real(v4):
    return [_cx(v4[0], v4[1]), _cx(v4[2], v4[3])]


def _real_from_cvec(cv):
    return [cv[0].w, cv[0].x, cv[1].w, cv[1].x]


def _omega0(x, y) -> GQuat:
    return x[0] * y[1] - x[1] * y[0]


def build_sl2c_row(params: ModelParams) -> Model:
    case = params.case
    exact = params.exact
    zero, one = params.zero, params.one
    h = sl2c(exact)
    if case == "A6":
        nm, nh = 6, 6

        def vec():
            return [zero] * (nm + nh)

        def hh(a, b):
            out = vec()
            out[nm:] = list(h.c[a, b])
            return out

        def hm(a, j):
            out = vec()
            out[:nm] = list(h.c[a, j])
            return out

        def mm(i, j):
            out = vec()
            out[:nm] = list(h.c[i, j])
            return out

        J = [[zero] * 6 for _ in range(6)]
        for a in range(3):
            J[3 + a][a] = one
            J[a][3 + a] = -one
        labels = ("E", "F", "H", "iE", "iF", "iH", "hE", "hF", "hH", "hiE", "hiF", "hiH")
        return assemble(params, nm, nh, hh, hm, mm, labels, J, None)

    mats = _sl2_matrices(exact)
    vbasis = [[one if k == j else zero for k in range(4)] for j in range(4)]
    nm, nh = 6, 6

    def vec():
        return [zero] * (nm + nh)

    def hh(a, b):
        out = vec()
        out[nm:] = list(h.c[a, b])
        return out

    def hm(a, j):
        out = vec()
        if j < 4:
            x = _cvec_from_real(vbasis[j])
            M = mats[a]
            y = [M[r][0] * x[0] + M[r][1] * x[1] for r in range(2)]
            out[:4] = _real_from_cvec(y)
        return out

    P = params

    def mm(i, j):
        out = vec()
        if j < 4:
            if case == "A5.2":
                w = _omega0(_cvec_from_real(vbasis[i]), _cvec_from_real(vbasis[j]))
                out[4] = w.w
                out[5] = P.r * w.x
        elif i < 4:
            x = _cvec_from_real(vbasis[i])
            if case == "A5.1":
                s = _cx(P.alpha) if j == 4 else _cx(P.beta, P.gamma)
                out[:4] = _real_from_cvec([s * x[0], s * x[1]])
        elif case == "A5.1":
            out[4] = P.eps
        return out

    J = [[zero] * 6 for _ in range(6)]
    for a in (0, 2):
        J[a + 1][a] = one
        J[a][a + 1] = -one
    J[5][4] = one
    J[4][5] = -one
    lam = P.lam if P.lam is not None else _cx(one)
    W = [[zero] * 6 for _ in range(6)]
    for a in range(4):
        for b in range(4):
            w = lam * _omega0(_cvec_from_real(vbasis[a]), _cvec_from_real(vbasis[b]))
            W[a][b] = w.w
    W[4][5] = one
    W[5][4] = -one
    labels = ("z1", "iz1", "z2", "iz2", "e", "ie", "E", "F", "H", "iE", "iF", "iH")
    return assemble(params, nm, nh, hh, hm, mm, labels, J, W)
