"""Degree-3 symbol algebra S = (a,b / K,w) over K = Q(w).

Generators x, y satisfy x^3 = a, y^3 = b, yx = w*xy.  Elements are stored as
nine coordinates in the fixed basis

    (1, x, x^2, y, y^2, xy, x^2y^2, x^2y, xy^2)

whose exponent pairs (i, j) with monomial x^i y^j are listed in EXPONENTS.
Multiplication comes from the closed-form rewriting rule

    (x^i y^j)(x^k y^l) = w^(jk) * a^((i+k) div 3) * b^((j+l) div 3)
                         * x^((i+k) mod 3) y^((j+l) mod 3),

never from a transcribed table.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .cyclotomic import CycQ, OMEGA_POW, ONE, ZERO, _coerce


class ParamsMismatch(ValueError):
    """Two elements from algebras with different (a, b) were combined."""


class NotInvertible(ArithmeticError):
    """The element has reduced norm zero and therefore no inverse."""


EXPONENTS = ((0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (2, 2), (2, 1), (1, 2))
INDEX_OF = {e: k for k, e in enumerate(EXPONENTS)}
BASIS_NAMES = ("1", "x", "x^2", "y", "y^2", "x*y", "x^2*y^2", "x^2*y", "x*y^2")


def basis_product_exponents(e1, e2):
    """Structure of (x^i y^j)(x^k y^l): (omega_pow, a_pow, b_pow, result exponents)."""
    i, j = e1
    k, l = e2
    return (j * k) % 3, (i + k) // 3, (j + l) // 3, ((i + k) % 3, (j + l) % 3)


class SymbolAlgebra:
    """The pair (a, b) of nonzero scalars defining S, plus element constructors."""

    __slots__ = ("a", "b", "_table")

    def __init__(self, a, b):
        a = _as_cycq(a)
        b = _as_cycq(b)
        if not a or not b:
            raise ValueError("symbol algebra needs nonzero a and b")
        self.a = a
        self.b = b
        self._table = None

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolAlgebra) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"SymbolAlgebra(a={self.a}, b={self.b})"

    def table(self):
        """9x9 structure table: table[i][k] = (scalar, result index)."""
        if self._table is None:
            powers_a = (ONE, self.a, self.a * self.a)
            powers_b = (ONE, self.b, self.b * self.b)
            rows = []
            for e1 in EXPONENTS:
                row = []
                for e2 in EXPONENTS:
                    w, pa, pb, res = basis_product_exponents(e1, e2)
                    row.append((OMEGA_POW[w] * powers_a[pa] * powers_b[pb], INDEX_OF[res]))
                rows.append(tuple(row))
            self._table = tuple(rows)
        return self._table

    def element(self, coeffs: Iterable) -> "SymbolElement":
        cs = tuple(_as_cycq(c) for c in coeffs)
        if len(cs) != 9:
            raise ValueError("an element needs exactly 9 coefficients")
        return SymbolElement(self, cs)

    def zero(self) -> "SymbolElement":
        return self.element([0] * 9)

    def one(self) -> "SymbolElement":
        return self.monomial(0)

    def x(self) -> "SymbolElement":
        return self.monomial(1)

    def y(self) -> "SymbolElement":
        return self.monomial(3)

    def monomial(self, index: int, coeff=1) -> "SymbolElement":
        cs = [ZERO] * 9
        cs[index] = _as_cycq(coeff)
        return SymbolElement(self, tuple(cs))

    def scalar(self, value) -> "SymbolElement":
        return self.monomial(0, value)


def basis_product(e1, e2, algebra: SymbolAlgebra):
    """Product of basis monomials x^i y^j and x^k y^l as (scalar, exponent pair)."""
    scalar, idx = algebra.table()[INDEX_OF[tuple(e1)]][INDEX_OF[tuple(e2)]]
    return scalar, EXPONENTS[idx]


class CharData(NamedTuple):
    """Coefficients (tau, pi, eta) of X^3 - tau*X^2 + pi*X - eta."""

    tau: CycQ
    pi: CycQ
    eta: CycQ


class SymbolElement:
    """An element of a fixed symbol algebra; immutable."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: SymbolAlgebra, coeffs: tuple):
        self.algebra = algebra
        self.coeffs = coeffs

    def _check_same(self, other: "SymbolElement"):
        if self.algebra != other.algebra:
            raise ParamsMismatch(
                f"cannot combine elements of {self.algebra!r} and {other.algebra!r}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        terms = [
            f"({c})*{name}" if name != "1" else f"({c})"
            for c, name in zip(self.coeffs, BASIS_NAMES)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def __add__(self, other) -> "SymbolElement":
        if not isinstance(other, SymbolElement):
            return NotImplemented
        self._check_same(other)
        return SymbolElement(
            self.algebra, tuple(u + v for u, v in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other) -> "SymbolElement":
        if not isinstance(other, SymbolElement):
            return NotImplemented
        self._check_same(other)
        return SymbolElement(
            self.algebra, tuple(u - v for u, v in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "SymbolElement":
        return SymbolElement(self.algebra, tuple(-u for u in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, SymbolElement):
            self._check_same(other)
            table = self.algebra.table()
            out = [ZERO] * 9
            for i, ci in enumerate(self.coeffs):
                if not ci:
                    continue
                row = table[i]
                for k, ck in enumerate(other.coeffs):
                    if not ck:
                        continue
                    scalar, idx = row[k]
                    out[idx] = out[idx] + ci * ck * scalar
            return SymbolElement(self.algebra, tuple(out))
        scalar = _coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        # Scalars are central, so left and right scaling agree.
        scalar = _coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def scale(self, k) -> "SymbolElement":
        k = _as_cycq(k)
        return SymbolElement(self.algebra, tuple(k * c for c in self.coeffs))

    def __pow__(self, n: int) -> "SymbolElement":
        if n < 0:
            return (self ** (-n)).inverse()
        out = self.algebra.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def coeff(self, key) -> CycQ:
        """Coefficient by basis index 0..8 or by exponent pair (i, j)."""
        if isinstance(key, tuple):
            key = INDEX_OF[key]
        return self.coeffs[key]

    def reduced_trace(self) -> CycQ:
        """tau(z) = 3*c0; the 9x9 left representation has trace 9*c0 = 3*tau(z)."""
        return 3 * self.coeffs[0]

    def pi_form(self) -> CycQ:
        """pi(z) = (tau(z)^2 - tau(z^2)) / 2."""
        tau = self.reduced_trace()
        tau_sq = (self * self).reduced_trace()
        diff = tau * tau - tau_sq
        return CycQ(diff.r / 2, diff.s / 2)

    def reduced_norm(self) -> CycQ:
        """eta(z), evaluated as the explicit cubic form in the coefficients.

        Writing c_ij for the coefficient of x^i y^j:

          eta = a^2 (c20^3 + b c21^3 + b^2 c22^3 - 3 b c20 c21 c22)
              + a   (c10^3 + b c11^3 + b^2 c12^3 - 3 b c10 c11 c12)
              - 3a  (c00 c10 c20 + b c01 c11 c21 + b^2 c02 c12 c22)
              - 3ab w   (c00 c12 c21 + c01 c10 c22 + c02 c11 c20)
              - 3ab w^2 (c00 c11 c22 + c02 c10 c21 + c01 c12 c20)
              +      c00^3 + b c01^3 + b^2 c02^3 - 3 b c00 c01 c02.

        The cube of this value equals det of the left representation, which the
        verification suite checks independently.
        """
        a, b = self.algebra.a, self.algebra.b
        c = self.coeff
        c00, c10, c20 = c((0, 0)), c((1, 0)), c((2, 0))
        c01, c11, c21 = c((0, 1)), c((1, 1)), c((2, 1))
        c02, c12, c22 = c((0, 2)), c((1, 2)), c((2, 2))
        w, w2 = OMEGA_POW[1], OMEGA_POW[2]
        out = a * a * (c20**3 + b * c21**3 + b * b * c22**3 - 3 * b * c20 * c21 * c22)
        out = out + a * (c10**3 + b * c11**3 + b * b * c12**3 - 3 * b * c10 * c11 * c12)
        out = out - 3 * a * (c00 * c10 * c20 + b * c01 * c11 * c21 + b * b * c02 * c12 * c22)
        out = out - 3 * a * b * w * (c00 * c12 * c21 + c01 * c10 * c22 + c02 * c11 * c20)
        out = out - 3 * a * b * w2 * (c00 * c11 * c22 + c02 * c10 * c21 + c01 * c12 * c20)
        out = out + c00**3 + b * c01**3 + b * b * c02**3 - 3 * b * c00 * c01 * c02
        return out

    def char_poly(self) -> CharData:
        """(tau, pi, eta); the element is a root of X^3 - tau X^2 + pi X - eta."""
        return CharData(self.reduced_trace(), self.pi_form(), self.reduced_norm())

    def adjoint(self) -> "SymbolElement":
        """z* = z^2 - tau(z) z + pi(z); satisfies z z* = z* z = eta(z)."""
        sq = self * self
        return sq - self.scale(self.reduced_trace()) + self.algebra.scalar(self.pi_form())

    def inverse(self) -> "SymbolElement":
        eta = self.reduced_norm()
        if not eta:
            raise NotInvertible("reduced norm is zero")
        return self.adjoint().scale(eta.inverse())

    def twist(self, k: int) -> "SymbolElement":
        """Scale the y-degree-d coefficient block by w^(d*k); an algebra automorphism."""
        if k not in (1, 2):
            raise ValueError("twist exponent must be 1 or 2")
        return SymbolElement(
            self.algebra,
            tuple(
                c * OMEGA_POW[(j * k) % 3]
                for c, (_, j) in zip(self.coeffs, EXPONENTS)
            ),
        )

    def scalar_part(self) -> CycQ:
        return self.coeffs[0]


def _as_cycq(value) -> CycQ:
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a scalar in Q(w)")
    return out


def element_to_dict(z: SymbolElement) -> dict:
    """JSON-ready form: scalar strings for a, b and the nine coefficients."""
    return {
        "a": str(z.algebra.a),
        "b": str(z.algebra.b),
        "coeffs": [str(c) for c in z.coeffs],
    }


def element_from_dict(data: dict) -> SymbolElement:
    algebra = SymbolAlgebra(CycQ.parse(data["a"]), CycQ.parse(data["b"]))
    coeffs = data["coeffs"]
    if len(coeffs) != 9:
        raise ValueError("element JSON needs exactly 9 coefficients")
    return algebra.element([CycQ.parse(c) for c in coeffs])
