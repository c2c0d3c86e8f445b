"""Reductive pairs g = m + h with invariant J, omega and metric on m."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..lie import LieAlg, Rep, equivariance_defect, jacobi_defect
from ..scalar import FLOAT_TOL, array_is_zero, format_scalar, zeros
from .params import ModelParams


class ConstructionError(RuntimeError):
    """An internal construction produced inconsistent data."""


@dataclass(frozen=True, eq=False)
class Model:
    """Basis of ``g`` is ordered with ``m`` first (indices ``0..nm-1``) then ``h``.

    ``J``, ``omega`` and ``metric`` are matrices on ``m``; ``J`` acts on column
    vectors, the forms are Gram matrices.  ``omega`` or ``metric`` is ``None``
    when the case carries no such invariant (or J and omega are incompatible).
    """
    params: ModelParams
    g: LieAlg
    nm: int
    J: np.ndarray
    omega: np.ndarray | None = None
    metric: np.ndarray | None = None
    notes: tuple = field(default=())
    float_tol: float = FLOAT_TOL

    @property
    def case(self) -> str:
        return self.params.case

    @property
    def exact(self) -> bool:
        return self.g.exact

    @property
    def nh(self) -> int:
        return self.g.dim - self.nm

    @property
    def tol(self) -> float:
        return self.float_tol

    @property
    def cm(self) -> np.ndarray:
        """m-part of brackets of m-vectors: ``cm[i, j, k]``, ``k`` in m."""
        return self.g.c[: self.nm, : self.nm, : self.nm]

    @property
    def ch(self) -> np.ndarray:
        """h-part of brackets of m-vectors: ``ch[i, j, a]``."""
        return self.g.c[: self.nm, : self.nm, self.nm:]

    @property
    def rep(self) -> Rep:
        nm = self.nm
        h = LieAlg(self.g.c[nm:, nm:, nm:], self.g.labels[nm:])
        # rho[a][k, j] = coefficient of m_k in [h_a, m_j]
        rho = np.transpose(self.g.c[nm:, :nm, :nm], (0, 2, 1))
        return Rep(h, rho)

    def m_is_subalgebra(self) -> bool:
        return array_is_zero(self.ch)

    def reductive_defect(self):
        nm = self.nm
        c = self.g.c
        bad_hh = c[nm:, nm:, :nm]
        bad_hm = c[nm:, :nm, nm:]
        return array_is_zero(bad_hh) and array_is_zero(bad_hm)

    def to_json(self) -> dict:
        def mat(M):
            if M is None:
                return None
            return [[format_scalar(v) for v in row] for row in M]

        out = self.params.to_json()
        out.update({
            "algebra": self.g.to_json(),
            "m_dim": self.nm,
            "h_dim": self.nh,
            "J": mat(self.J),
            "omega": mat(self.omega),
            "metric": mat(self.metric),
            "mode": "exact" if self.exact else "float",
        })
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)


def assemble(params: ModelParams, nm: int, nh: int, hh, hm, mm, labels, J, omega=None,
             notes=()) -> Model:
    """Build a Model from bracket callbacks.

    ``hh(a, b)``, ``hm(a, j)`` and ``mm(i, j)`` return coordinate vectors of length
    ``nm + nh`` for the bracket of basis elements (``mm`` only for ``i < j``).
    The metric is derived as ``g(x, y) = omega(x, J y)`` and kept only when symmetric.
    """
    exact = params.exact
    n = nm + nh
    c = zeros((n, n, n), exact)

    def put(i, j, vec):
        for k, v in enumerate(vec):
            if v != 0:
                c[i, j, k] = v
                c[j, i, k] = -v

    for a in range(nh):
        for b in range(a + 1, nh):
            put(nm + a, nm + b, hh(a, b))
        for j in range(nm):
            put(nm + a, j, hm(a, j))
    for i in range(nm):
        for j in range(i + 1, nm):
            put(i, j, mm(i, j))
    g = LieAlg(c, tuple(labels))
    J = _as_array(J, exact)
    metric = None
    if omega is not None:
        omega = _as_array(omega, exact)
        G = omega @ J
        if array_is_zero(G - G.T):
            metric = G
    return Model(params, g, nm, J, omega, metric, tuple(notes))


def _as_array(M, exact: bool) -> np.ndarray:
    arr = np.array(M, dtype=object if exact else float)
    return arr


def invariant_report(model: Model) -> dict:
    """Structural checks every catalog entry must pass."""
    jd, _ = jacobi_defect(model.g, model.tol)
    rep = model.rep
    B = model.g.c[: model.nm, : model.nm, :]
    eq = equivariance_defect(rep, B)
    J = model.J
    nm = model.nm
    Id = np.eye(nm, dtype=int).astype(J.dtype)
    out = {
        "jacobi": jd,
        "equivariance": eq,
        "reductive": model.reductive_defect(),
        "J_squared": array_is_zero(J @ J + Id, model.tol),
        "J_equivariant": all(array_is_zero(r @ J - J @ r, model.tol) for r in rep.rho),
        "rep_homomorphism": rep.homomorphism_defect(),
    }
    if model.omega is not None:
        W = model.omega
        out["omega_invariant"] = all(array_is_zero(r.T @ W + W @ r, model.tol) for r in rep.rho)
        out["omega_skew"] = array_is_zero(W + W.T, model.tol)
    if model.metric is not None:
        G = model.metric
        out["metric_invariant"] = all(array_is_zero(r.T @ G + G @ r, model.tol) for r in rep.rho)
        out["metric_J_compatible"] = array_is_zero(J.T @ G @ J - G, model.tol)
    return out


def check_model(model: Model) -> None:
    rep = invariant_report(model)
    bad = [k for k, v in rep.items() if (v is False) or (not isinstance(v, bool) and v != 0 and v > model.tol)]
    if bad:
        raise ConstructionError(f"{model.case}: model invariants failed: {', '.join(bad)}")
