"""Exact arithmetic in the quadratic field Q(sqrt3), plus a float fallback.

Rational values are carried as :class:`fractions.Fraction`; a :class:`Scalar`
only appears once sqrt3 enters a computation.  Both interoperate through the
usual operator protocol, so tensor code can stay agnostic of which one it holds.
Float mode simply means numpy ``float64`` arrays and tolerance-based zero tests.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import numpy as np

FLOAT_TOL = 1e-9


class Scalar:
    """Immutable element ``a + b*sqrt3`` with rational ``a, b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.a * self.a - 3 * self.b * self.b
        if n == 0:
            # a^2 = 3 b^2 has no rational solution except 0
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = Scalar(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __pos__(self):
        return self

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        return sa if a * a > 3 * b * b else sb

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, float):
                return float(self) == other
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * 3.0 ** 0.5

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


SQRT3 = Scalar(0, 1)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Canonical string: ``"p/q"`` or ``"p/q+r/s*sqrt3"``; floats via ``repr``."""
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if isinstance(x, Scalar):
        if x.b == 0:
            return _frac_str(x.a)
        b = _frac_str(abs(x.b))
        sign = "-" if x.b < 0 else "+"
        if x.a == 0:
            return ("-" if x.b < 0 else "") + f"{b}*sqrt3"
        return f"{_frac_str(x.a)}{sign}{b}*sqrt3"
    return _frac_str(Fraction(x))


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_scalar(text: str):
    """Parse a canonical scalar string.

    Returns a ``Fraction`` for rational input and a :class:`Scalar` otherwise.
    Accepted terms: ``p``, ``p/q``, ``sqrt3``, ``p/q*sqrt3``, decimals.
    """
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    s = s.replace("√3", "sqrt3")
    a = Fraction(0)
    b = Fraction(0)
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse scalar {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        if body.endswith("sqrt3"):
            coef = body[: -len("sqrt3")].rstrip("*")
            # allow "1/2*sqrt3" as well as "sqrt3/2"
            b += sign * (Fraction(coef) if coef else Fraction(1))
        elif "sqrt3" in body:
            head, _, tail = body.partition("sqrt3")
            head = head.rstrip("*") or "1"
            if not tail.startswith("/"):
                raise ValueError(f"cannot parse scalar {text!r}")
            b += sign * Fraction(head) / Fraction(tail[1:])
        else:
            a += sign * Fraction(body)
    if pos != len(s):
        raise ValueError(f"cannot parse scalar {text!r}")
    return a if b == 0 else Scalar(a, b)


def as_exact(x):
    """Normalize an int/Fraction/Scalar/str to an exact field element."""
    if isinstance(x, Scalar):
        return x.a if x.b == 0 else x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (float, np.floating)):
        raise TypeError(f"float {x!r} in exact mode; pass a rational string instead")
    return Fraction(x)


def to_float(x) -> float:
    return float(x)


def is_exact_array(a: np.ndarray) -> bool:
    return a.dtype == object


def is_zero(x, tol: float = FLOAT_TOL, scale: float = 1.0) -> bool:
    """Exact zero test for field elements; relative tolerance for floats."""
    if isinstance(x, (float, np.floating)):
        return abs(x) <= tol * max(1.0, scale)
    return x == 0


def array_is_zero(a, tol: float = FLOAT_TOL) -> bool:
    a = np.asarray(a)
    if a.size == 0:
        return True
    if a.dtype == object:
        return all(v == 0 for v in a.flat)
    return bool(np.max(np.abs(a)) <= tol)


def max_abs(a):
    """Max-norm of an array; exact for object arrays."""
    a = np.asarray(a)
    if a.size == 0:
        return Fraction(0)
    if a.dtype == object:
        best = Fraction(0)
        for v in a.flat:
            av = abs(v)
            if av > best:
                best = av
        return best
    return float(np.max(np.abs(a)))


def zeros(shape, exact: bool = True) -> np.ndarray:
    if exact:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros(shape)


def eye(n: int, exact: bool = True) -> np.ndarray:
    out = zeros((n, n), exact)
    for i in range(n):
        out[i, i] = Fraction(1) if exact else 1.0
    return out


def exact_array(values) -> np.ndarray:
    arr = np.array(values, dtype=object)
    flat = arr.reshape(-1)
    for i, v in enumerate(flat):
        flat[i] = as_exact(v)
    return arr
