"""The two G2 models: derivations of the (split) octonions acting on S^6 or S^{2,4}.

Octonions are the Cayley-Dickson double of H (compact) or H_s (split) with
``(a, b)(c, d) = (ac - d* b, da + b c*)``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .. import linalg
from ..lie import LieAlg, algebra_derivations
from ..quaternion import GQuat, basis
from ..scalar import zeros
from .model import ConstructionError, Model
from .params import ModelParams

O_LABELS = ("1", "i", "j", "k", "l", "il", "jl", "kl")


def _double_mul(x, y):
    a, b = x
    c, d = y
    return (a * c - d.conj() * b, d * a + b * c.conj())


def octonion_table(split: bool) -> np.ndarray:
    """Multiplication constants ``M[i, j, k]`` of the 8 basis units."""
    eps = 1 if split else -1
    q = basis(eps)
    zero = GQuat(0, 0, 0, 0, eps) * Fraction(1)
    units = [(u, zero) for u in q] + [(zero, u) for u in q]
    M = zeros((8, 8, 8))
    for i, x in enumerate(units):
        for j, y in enumerate(units):
            a, b = _double_mul(x, y)
            M[i, j] = list(a.coords) + list(b.coords)
    return M


def octonion_mul(M: np.ndarray, x, y) -> np.ndarray:
    return np.einsum("i,j,ijk->k", x, y, M)


def octonion_norm_form(M: np.ndarray) -> np.ndarray:
    """Polarized norm: ``<x, y> = Re(x y*)`` on the unit basis."""
    n = M.shape[0]
    G = zeros((n, n))
    for i in range(n):
        for j in range(n):
            # conjugation negates the imaginary units
            s = 1 if j == 0 else -1
            G[i, j] = s * M[i, j, 0]
    return G


class _Coords:
    """Coordinates of matrices in a fixed basis, via an invertible square minor."""

    def __init__(self, mats: list[np.ndarray]):
        self.flat = np.array([m.reshape(-1) for m in mats], dtype=object).T
        rows = linalg.independent_subset(list(self.flat), self.flat.shape[1])
        if len(rows) != len(mats):
            raise ConstructionError("basis matrices are linearly dependent")
        self.rows = rows
        self.inv = linalg.inverse(self.flat[rows, :])

    def __call__(self, mat: np.ndarray) -> np.ndarray:
        v = mat.reshape(-1)
        x = self.inv @ v[self.rows]
        if any(val != 0 for val in (self.flat @ x - v)):
            raise ConstructionError("matrix outside the span of the basis")
        return x


def build_g2_model(form: str = "compact") -> Model:
    if form not in ("compact", "split"):
        raise ValueError("form must be 'compact' or 'split'")
    split = form == "split"
    M = octonion_table(split)
    der = algebra_derivations(M)
    if len(der) != 14:
        raise ConstructionError(f"derivation algebra has dimension {len(der)}, expected 14")
    u0 = 1  # the unit i, u0^2 = -1 in both forms
    crd = _Coords(der)

    def bracket_coords(mats, coords, a, b):
        return coords(mats[a] @ mats[b] - mats[b] @ mats[a])

    c_old = zeros((14, 14, 14))
    for a in range(14):
        for b in range(a + 1, 14):
            v = bracket_coords(der, crd, a, b)
            c_old[a, b] = v
            c_old[b, a] = -v
    old = LieAlg(c_old)
    ads = old.ad_basis()
    K = np.array([[np.trace(ads[a] @ ads[b]) for b in range(14)] for a in range(14)], dtype=object)

    # stabilizer of u0: coefficient vectors x with sum_a x_a D_a(u0) = 0
    images = np.array([[d[k, u0] for d in der] for k in range(8)], dtype=object)
    h_coef = linalg.mat_kernel(images)
    if len(h_coef) != 8:
        raise ConstructionError(f"stabilizer has dimension {len(h_coef)}, expected 8")
    m_space = linalg.mat_kernel(np.array([K @ v for v in h_coef], dtype=object))
    if len(m_space) != 6:
        raise ConstructionError("Killing complement of the stabilizer is not 6-dimensional")

    # pick the m-element D_w with D_w(u0) = w for each imaginary unit w orthogonal to u0
    targets = [k for k in range(1, 8) if k != u0]
    mbasis = []
    A = np.array([[sum(v[a] * der[a][k, u0] for a in range(14)) for v in m_space] for k in range(8)], dtype=object)
    for w in targets:
        rhs = np.array([Fraction(int(k == w)) for k in range(8)], dtype=object)
        y = linalg.solve(A, rhs)
        if y is None:
            raise ConstructionError("m does not map onto the orthogonal complement of u0")
        mbasis.append(sum((y[s] * m_space[s] for s in range(6)), zeros(14)))

    new_basis = mbasis + list(h_coef)
    mats = [sum((v[a] * der[a] for a in range(14)), zeros((8, 8))) for v in new_basis]
    crd_new = _Coords(mats)
    c = zeros((14, 14, 14))
    for a in range(14):
        for b in range(a + 1, 14):
            v = bracket_coords(mats, crd_new, a, b)
            c[a, b] = v
            c[b, a] = -v
    labels = tuple(f"D_{O_LABELS[w]}" for w in targets) + tuple(f"s{a}" for a in range(8))
    g = LieAlg(c, labels)

    # J(D_w) = D_{u0 w}; metric from the norm form, negated in the split case
    J = zeros((6, 6))
    for col, w in enumerate(targets):
        prod = M[u0, w]
        for row, w2 in enumerate(targets):
            J[row, col] = prod[w2]
    N = octonion_norm_form(M)
    sign = -1 if split else 1
    G = zeros((6, 6))
    for a, w in enumerate(targets):
        for b, w2 in enumerate(targets):
            G[a, b] = sign * N[w, w2]
    omega = J.T @ G
    params = ModelParams(case="G2s" if split else "G2c")
    return Model(params, g, 6, J, omega, G, ("octonion doubling", f"u0={O_LABELS[u0]}"))
