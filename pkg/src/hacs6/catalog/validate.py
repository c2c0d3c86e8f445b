"""Row constraints, quoted the way the tables print them."""
from __future__ import annotations

from ..quaternion import GQuat
from ..scalar import is_zero
from .params import SCHEMA, ModelParams, quat_algebra


class ParameterError(ValueError):
    def __init__(self, case: str, violations: list[str]):
        self.case = case
        self.violations = violations
        super().__init__(f"{case}: violated constraint(s): " + "; ".join(violations))


def _qzero(x: GQuat) -> bool:
    return all(is_zero(c) for c in x.coords)


def _qeq(x: GQuat, y: GQuat) -> bool:
    return _qzero(x - y)


def _in(v, allowed) -> bool:
    return any(is_zero(v - a) for a in allowed)


def _delta0(r) -> int:
    return 1 if is_zero(r) else 0


def validate_params(p: ModelParams) -> list[str]:
    """Return the list of violated constraints (empty when the point is valid)."""
    case = p.case
    out: list[str] = []
    scalars, quats = SCHEMA[case]
    optional = {"b", "lam"}
    for name in list(scalars) + list(quats):
        if getattr(p, name) is None and name not in optional:
            out.append(f"missing parameter {name}")
    if out:
        return out
    eps_alg = quat_algebra(case)
    for name in ("q", "p", "u", "b"):
        v = getattr(p, name)
        if v is None:
            continue
        if v.eps != eps_alg:
            out.append(f"{name} must lie in {'H_s' if eps_alg == 1 else 'H'}")
        elif not is_zero(v.w):
            out.append(f"{name}∈Im")

    if case.startswith(("A1", "A3")):
        q = p.q
        if q is not None and q.eps == eps_alg and not _qeq(q * q, GQuat(p.one, eps=eps_alg)* -1):
            out.append("q²=−1")
        b = p.omega_b()
        if b is not None and _qzero(b):
            out.append("b≠0")

    e, a = p.eps, p.alpha
    if case == "A1.1":
        if not _in(e, (0, 1)):
            out.append("ε∈{0,1}")
        if is_zero(a):
            out.append("α≠0")
    elif case == "A1.3" or case == "A5.1":
        if not any(is_zero(e - x) and is_zero(a - y) for x, y in ((0, 0), (0, 1), (1, 0))):
            out.append("(ε,α)∈{(0,0),(0,1),(1,0)}")
    elif case == "A1.4":
        if not _in(e, (-1, 1)):
            out.append("ε=±1")
    elif case == "A3.1":
        if not _in(e, (0, 1)):
            out.append("ε∈{1,0}")
        if p.p.eps == eps_alg and is_zero((p.p * p.p).w):
            out.append("p²≠0")
    elif case == "A3.2":
        if not _in(e, (0, 1)):
            out.append("ε∈{1,0}")
        pp = p.p
        if not _qzero(pp * pp):
            out.append("p²=0")
        if _qzero(pp):
            out.append("p≠0")
        rhs = pp * (e + 2 * a * _delta0(p.r))
        if not _qeq(pp.commutator(p.u), rhs):
            out.append("[p,u]=(ε+2αδ⁰_r)p")
    elif case == "A3.3":
        if _qzero(p.p) and _qzero(p.u):
            out.append("[V,V]≠0: p,u not both 0")
    elif case == "A3.4":
        pp = p.p
        branch0 = is_zero(e) and _qzero(pp)
        branch1 = (is_zero(e - 1) and _qeq(pp.commutator(p.u), pp) and _qzero(pp * pp) and is_zero(a))
        if not (branch0 or branch1):
            out.append("ε=p=0 or (ε=1, [p,u]=p, p²=0, α=0)")
    elif case == "A3.5":
        i = GQuat(p.zero, p.one, p.zero, p.zero, eps_alg)
        j = GQuat(p.zero, p.zero, p.one, p.zero, eps_alg)
        if not (_qeq(p.p, i) or _qeq(p.p, j)):
            out.append("p∈{i,j}")
    elif case[:2] in ("A2", "A4"):
        if is_zero(p.t):
            out.append("t≠0")
    if case in ("A5.1", "A5.2") and p.lam is not None:
        if _qzero(p.lam) or not (is_zero(p.lam.y) and is_zero(p.lam.z)):
            out.append("λ∈ℂ, λ≠0")
    return out


def check_params(p: ModelParams) -> None:
    bad = validate_params(p)
    if bad:
        raise ParameterError(p.case, bad)
