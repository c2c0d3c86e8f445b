"""Generalized quaternions H_eps: i^2 = -1, j^2 = eps, k = ij.

``eps = -1`` gives Hamilton's quaternions, ``eps = +1`` the split quaternions.
Components may be exact field elements or floats.
"""
from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .scalar import as_exact, format_scalar, parse_scalar


class AlgebraMismatch(ValueError):
    pass


class GQuat:
    __slots__ = ("w", "x", "y", "z", "eps")

    def __init__(self, w=0, x=0, y=0, z=0, eps: int = -1):
        if eps not in (-1, 1):
            raise ValueError("eps must be -1 or +1")
        self.w, self.x, self.y, self.z = w, x, y, z
        self.eps = eps

    @classmethod
    def from_seq(cls, seq, eps: int = -1) -> "GQuat":
        w, x, y, z = seq
        return cls(w, x, y, z, eps)

    @property
    def coords(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def _check(self, other: "GQuat"):
        if self.eps != other.eps:
            raise AlgebraMismatch(f"cannot combine H_{self.eps} with H_{other.eps}")

    def __add__(self, other):
        if not isinstance(other, GQuat):
            return self + GQuat(other, eps=self.eps)
        self._check(other)
        return GQuat(self.w + other.w, self.x + other.x, self.y + other.y,
                     self.z + other.z, self.eps)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GQuat(-self.w, -self.x, -self.y, -self.z, self.eps)

    def __mul__(self, other):
        if not isinstance(other, GQuat):
            return GQuat(self.w * other, self.x * other, self.y * other,
                         self.z * other, self.eps)
        self._check(other)
        e = self.eps
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        return GQuat(
            a1 * a2 - b1 * b2 + e * (c1 * c2 + d1 * d2),
            a1 * b2 + b1 * a2 - e * (c1 * d2 - d1 * c2),
            a1 * c2 + c1 * a2 - b1 * d2 + d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
            e,
        )

    def __rmul__(self, other):
        return GQuat(other * self.w, other * self.x, other * self.y,
                     other * self.z, self.eps)

    def __truediv__(self, scalar):
        return GQuat(self.w / scalar, self.x / scalar, self.y / scalar,
                     self.z / scalar, self.eps)

    def conj(self) -> "GQuat":
        return GQuat(self.w, -self.x, -self.y, -self.z, self.eps)

    def norm(self):
        """Quadratic form q * conj(q) = w^2 + x^2 - eps (y^2 + z^2)."""
        return self.w * self.w + self.x * self.x - self.eps * (self.y * self.y + self.z * self.z)

    def inverse(self) -> "GQuat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("null quaternion has no inverse")
        return self.conj() / n

    def re(self):
        return self.w

    def im(self) -> "GQuat":
        return GQuat(0 * self.w, self.x, self.y, self.z, self.eps)

    def is_imaginary(self) -> bool:
        return self.w == 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def commutator(self, other: "GQuat") -> "GQuat":
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, GQuat):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return self.eps == other.eps and all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.coords, self.eps))

    def __repr__(self):
        return f"GQuat({format_quat(self)!r}, eps={self.eps})"

    def to_json(self) -> dict:
        return {"components": [format_scalar(c) for c in self.coords], "eps": self.eps}

    @classmethod
    def from_json(cls, obj, eps: int | None = None, exact: bool = True) -> "GQuat":
        if isinstance(obj, str):
            return parse_quat(obj, eps if eps is not None else -1, exact)
        if isinstance(obj, dict):
            comps = obj["components"]
            e = int(obj.get("eps", eps if eps is not None else -1))
        else:
            comps, e = obj, (eps if eps is not None else -1)
        conv = as_exact if exact else (lambda v: float(parse_scalar(v)) if isinstance(v, str) else float(v))
        return cls(*(conv(c) for c in comps), eps=e)

    # 4x4 real matrices on the coordinate vector (w, x, y, z)
    def left_matrix(self) -> np.ndarray:
        cols = [(self * b).coords for b in basis(self.eps, like=self.w)]
        return np.array(cols, dtype=object if _is_exact(self.w) else float).T

    def right_matrix(self) -> np.ndarray:
        cols = [(b * self).coords for b in basis(self.eps, like=self.w)]
        return np.array(cols, dtype=object if _is_exact(self.w) else float).T


def _is_exact(v) -> bool:
    return not isinstance(v, (float, np.floating))


def basis(eps: int = -1, like=Fraction(1)) -> list[GQuat]:
    one = Fraction(1) if _is_exact(like) else 1.0
    zero = one * 0
    return [GQuat(one, zero, zero, zero, eps), GQuat(zero, one, zero, zero, eps),
            GQuat(zero, zero, one, zero, eps), GQuat(zero, zero, zero, one, eps)]


def unit(name: str, eps: int = -1, exact: bool = True) -> GQuat:
    one = Fraction(1) if exact else 1.0
    zero = one * 0
    idx = "1ijk".index(name)
    comps = [zero] * 4
    comps[idx] = one
    return GQuat(*comps, eps=eps)


def from_vector(v, eps: int = -1) -> GQuat:
    return GQuat(v[0], v[1], v[2], v[3], eps)


def quat_mul(a: GQuat, b: GQuat) -> GQuat:
    return a * b


def format_quat(q: GQuat) -> str:
    parts = []
    for c, name in zip(q.coords, ("", "i", "j", "k")):
        if c == 0:
            continue
        s = format_scalar(c)
        if name:
            neg = s.startswith("-") and "+" not in s[1:] and "-" not in s[1:]
            body = s[1:] if neg else s
            if body == "1":
                body = name
            else:
                body = f"({body}){name}"
            s = ("-" if neg else "") + body
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


_QTERM = re.compile(r"\s*([+-]?)\s*(\([^)]*\)|[^+\-()ijk]*)\s*\*?\s*([ijk]?)")


def parse_quat(text: str, eps: int = -1, exact: bool = True) -> GQuat:
    """Parse strings such as ``"i"``, ``"3/5j+4/5k"``, ``"(1/2)i-(1/2)k"``."""
    s = str(text).replace(" ", "")
    comps = [Fraction(0)] * 4
    if not exact:
        comps = [0.0] * 4
    pos = 0
    if s in ("", "0"):
        return GQuat(*comps, eps=eps)
    while pos < len(s):
        m = _QTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse quaternion {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = m.group(2).strip("()")
        unit_name = m.group(3)
        if coef.endswith("*"):
            coef = coef[:-1]
        if not coef and not unit_name:
            raise ValueError(f"cannot parse quaternion {text!r}")
        val = parse_scalar(coef) if coef else Fraction(1)
        if not exact:
            val = float(val)
        comps["1ijk".index(unit_name or "1")] += sign * val
        pos = m.end()
    return GQuat(*comps, eps=eps)
