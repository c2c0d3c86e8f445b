"""Model descriptors: case id plus scalar and quaternionic parameters."""
from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

from ..quaternion import GQuat, format_quat, parse_quat
from ..scalar import Scalar, format_scalar, parse_scalar

V_CASES_SU2 = ("A1.1", "A1.2", "A1.3", "A1.4")
V_CASES_SU11 = ("A3.1", "A3.2", "A3.3", "A3.4", "A3.5")
AD_CASES_SU2 = ("A2.1", "A2.2", "A2.3", "A2.4")
AD_CASES_SU11 = ("A4.1", "A4.2", "A4.3", "A4.4")
SL2C_CASES = ("A5.1", "A5.2", "A6")
G2_CASES = ("G2c", "G2s")
ALL_CASES = V_CASES_SU2 + AD_CASES_SU2 + V_CASES_SU11 + AD_CASES_SU11 + SL2C_CASES + G2_CASES

SCALAR_NAMES = ("alpha", "beta", "gamma", "r", "t", "eps")
QUAT_NAMES = ("q", "p", "u", "b")

# parameter schema per case: (scalars, quaternions); b defaults to q when omitted
SCHEMA = {
    "A1.1": (("alpha", "r", "eps"), ("q", "b")),
    "A1.2": ((), ("q", "p", "b")),
    "A1.3": (("alpha", "beta", "r", "eps"), ("q", "b")),
    "A1.4": (("eps",), ("q", "b")),
    "A3.1": (("r", "eps"), ("q", "p", "b")),
    "A3.2": (("alpha", "r", "eps"), ("q", "p", "u", "b")),
    "A3.3": ((), ("q", "p", "u", "b")),
    "A3.4": (("alpha", "beta", "eps"), ("q", "p", "u", "b")),
    "A3.5": ((), ("q", "p", "b")),
    "A5.1": (("alpha", "beta", "gamma", "eps"), ("lam",)),
    "A5.2": (("r",), ("lam",)),
    "A6": ((), ()),
    "G2c": ((), ()),
    "G2s": ((), ()),
}
for _c in AD_CASES_SU2 + AD_CASES_SU11:
    SCHEMA[_c] = (("r", "t"), ())


def quat_algebra(case: str) -> int:
    """eps of the quaternion algebra carrying V: -1 for H, +1 for split H_s."""
    return 1 if case.startswith(("A3", "A4")) else -1


@dataclass(frozen=True)
class ModelParams:
    case: str
    alpha: object = None
    beta: object = None
    gamma: object = None
    r: object = None
    t: object = None
    eps: object = None
    q: GQuat | None = None
    p: GQuat | None = None
    u: GQuat | None = None
    b: GQuat | None = None
    # complex scale of the sl2(C)-invariant form, stored as a quaternion 1, i part
    lam: GQuat | None = None
    exact: bool = True

    def get(self, name, default=None):
        v = getattr(self, name)
        return default if v is None else v

    def with_(self, **kw) -> "ModelParams":
        return replace(self, **kw)

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def omega_b(self):
        """The quaternion fixing the V part of omega (defaults to q)."""
        return self.b if self.b is not None else self.q

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            if f.name in ("case", "exact"):
                continue
            v = getattr(self, f.name)
            if v is None:
                continue
            if isinstance(v, GQuat):
                out[f.name] = format_quat(v) if f.name != "lam" else _format_complex(v)
            else:
                out[f.name] = format_scalar(v)
        return {"case": self.case, "params": out}


def _format_complex(z: GQuat) -> str:
    return format_quat(z)


def _conv_scalar(v, exact: bool):
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v) if exact else float(v)
    if isinstance(v, (Fraction, Scalar)):
        return v if exact else float(v)
    if isinstance(v, float):
        if exact:
            raise ValueError(f"float {v!r} given in exact mode; use a rational string such as '1/3'")
        return v
    try:
        val = parse_scalar(str(v))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot read {v!r} as an element of Q(sqrt3); "
                         "write rationals like '1/3' and '2/3*sqrt3'") from None
    return val if exact else float(val)


def _conv_quat(v, eps: int, exact: bool):
    if isinstance(v, GQuat):
        return v
    if isinstance(v, (list, tuple)):
        return GQuat(*(_conv_scalar(c, exact) for c in v), eps=eps)
    if isinstance(v, dict):
        return GQuat(*(_conv_scalar(c, exact) for c in v["components"]), eps=int(v.get("eps", eps)))
    return parse_quat(str(v), eps, exact)


_ALIASES = {"α": "alpha", "β": "beta", "γ": "gamma", "ε": "eps", "ϵ": "eps", "epsilon": "eps",
            "λ": "lam", "lambda": "lam"}


def params_from_dict(obj: dict, exact: bool = True) -> ModelParams:
    """Parse ``{"case": ..., "params": {...}}`` or a flat mapping with a ``case`` key.

    Raises ``ValueError`` for an unknown case, unknown keys, or unparsable values.
    """
    case = obj.get("case")
    if case not in SCHEMA:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(ALL_CASES)}")
    raw = dict(obj.get("params", {}))
    for k, v in obj.items():
        if k not in ("case", "params"):
            raw[k] = v
    eps_alg = quat_algebra(case)
    kw = {}
    for k, v in raw.items():
        name = _ALIASES.get(k, k)
        if name in SCALAR_NAMES:
            kw[name] = _conv_scalar(v, exact)
        elif name in QUAT_NAMES:
            kw[name] = _conv_quat(v, eps_alg, exact)
        elif name == "lam":
            kw[name] = _conv_quat(v, -1, exact)
        else:
            raise ValueError(f"unknown parameter {k!r} for case {case}")
    return ModelParams(case=case, exact=exact, **kw)


def schema_text(case: str) -> str:
    scalars, quats = SCHEMA[case]
    return ", ".join(list(scalars) + list(quats)) or "(none)"
