"""Exact arithmetic in K = Q(w), w a primitive cube root of unity.

Elements are stored as r + s*w with rational r, s; the basis {1, w} is the
canonical normal form, so structural equality is semantic equality.  All
reductions use the minimal polynomial w^2 + w + 1 = 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a hard dependency, but the
    _rational = Fraction  # package still works (slower) on plain fractions

_RATIONAL_TYPES = (int, Fraction, type(_rational(0)))


class ScalarFormatError(ValueError):
    """Raised when a scalar string does not match the R / R+S*w / R-S*w grammar."""


_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^({_RAT})(?:([+-])(\d+(?:/\d+)?)\*w)?$")


def _fmt_rat(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class CycQ:
    """An element r + s*w of Q(w).  Immutable; all operations return new values."""

    __slots__ = ("r", "s")

    def __init__(self, r=0, s=0):
        # The rational constructor normalizes: lowest terms, positive denominator.
        self.r = _rational(r)
        self.s = _rational(s)

    @classmethod
    def omega(cls) -> "CycQ":
        return cls(0, 1)

    @classmethod
    def parse(cls, text: str) -> "CycQ":
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ScalarFormatError(f"not a scalar: {text!r}")
        r, sign, s = m.groups()
        try:
            if s is None:
                return cls(_rational(r))
            sval = _rational(s)
            return cls(_rational(r), -sval if sign == "-" else sval)
        except ZeroDivisionError:
            raise ScalarFormatError(f"zero denominator in {text!r}") from None

    def __str__(self) -> str:
        if self.s == 0:
            return _fmt_rat(self.r)
        sign = "-" if self.s < 0 else "+"
        return f"{_fmt_rat(self.r)}{sign}{_fmt_rat(abs(self.s))}*w"

    def __repr__(self) -> str:
        return f"CycQ({self.r!r}, {self.s!r})"

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.r == other.r and self.s == other.s

    def __hash__(self):
        return hash((self.r, self.s))

    def __bool__(self) -> bool:
        return self.r != 0 or self.s != 0

    def __add__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycQ(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __sub__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycQ(self.r - other.r, self.s - other.s)

    def __rsub__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "CycQ":
        return CycQ(-self.r, -self.s)

    def __mul__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (r1 + s1 w)(r2 + s2 w) with w^2 = -1 - w.
        r1, s1, r2, s2 = self.r, self.s, other.r, other.s
        cross = s1 * s2
        return CycQ(r1 * r2 - cross, r1 * s2 + s1 * r2 - cross)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycQ":
        if n < 0:
            return (self ** (-n)).inverse()
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "CycQ":
        """Galois conjugate w -> w^2, i.e. r + s*w -> (r - s) - s*w."""
        return CycQ(self.r - self.s, -self.s)

    def norm_rational(self):
        """u * conj(u) = r^2 - r*s + s^2, a nonnegative rational."""
        return self.r * self.r - self.r * self.s + self.s * self.s

    def inverse(self) -> "CycQ":
        n = self.norm_rational()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return CycQ(c.r / n, c.s / n)

    def __truediv__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycQ":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def is_rational(self) -> bool:
        return self.s == 0


def _coerce(value) -> "CycQ":
    if isinstance(value, CycQ):
        return value
    if isinstance(value, _RATIONAL_TYPES):
        return CycQ(value)
    return NotImplemented


ZERO = CycQ(0)
ONE = CycQ(1)
OMEGA = CycQ(0, 1)
OMEGA2 = OMEGA * OMEGA

# w^k for k = 0, 1, 2; used by the basis-product reduction everywhere.
OMEGA_POW = (ONE, OMEGA, OMEGA2)
