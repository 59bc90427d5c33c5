"""Laurent polynomials in one formal variable q with exact coefficients.

A polynomial is an immutable pair (low, coeffs): the value is
sum_k coeffs[k] q^(low + k), with no zero coefficient at either end.  The
zero polynomial has empty coeffs and low = 0.

>>> q = LaurentPolynomial.q()
>>> f = q**2 + 1
>>> f.star()
1 + q^-2
>>> (q * (q - 1) * (q**2 - 1)).qprime_split()
(1, q^3 - q^2 - q + 1)
>>> (q**-1).evaluate(2)
Fraction(1, 2)
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels
from .cyclotomic import Cyclotomic, conj

__all__ = ["LaurentPolynomial", "Q", "as_poly", "PoleError", "ZeroBaseError"]


class PoleError(ZeroDivisionError):
    """Evaluation at a zero of the denominator."""


class ZeroBaseError(ZeroDivisionError):
    """Negative power of q evaluated at q = 0."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Cyclotomic))


class LaurentPolynomial:
    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs=(), low: int = 0):
        c = [_norm(x) for x in coeffs]
        start = 0
        while start < len(c) and not c[start]:
            start += 1
        end = len(c)
        while end > start and not c[end - 1]:
            end -= 1
        if start == end:
            self.low, self.coeffs = 0, ()
        else:
            self.low, self.coeffs = low + start, tuple(c[start:end])
        self._hash = None

    @classmethod
    def _raw(cls, low, coeffs):
        # trusted constructor: coeffs already trimmed at the top, normalized
        obj = object.__new__(cls)
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        if start == len(coeffs):
            obj.low, obj.coeffs = 0, ()
        else:
            obj.low, obj.coeffs = low + start, tuple(_norm(c) for c in coeffs[start:])
        obj._hash = None
        return obj

    @classmethod
    def q(cls, k: int = 1) -> "LaurentPolynomial":
        return cls._raw(k, [1])

    @classmethod
    def constant(cls, c) -> "LaurentPolynomial":
        return cls._raw(0, [c])

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPolynomial":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        vec = [0] * (hi - lo + 1)
        for e, c in terms.items():
            vec[e - lo] = c
        return cls(vec, lo)

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return self.low + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return self.low

    def items(self):
        """(exponent, coefficient) pairs with nonzero coefficient, ascending."""
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c]

    def terms(self) -> dict:
        return dict(self.items())

    def __getitem__(self, e: int):
        k = e - self.low
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return not self.coeffs or self.low >= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def leading_coefficient(self):
        return self.coeffs[-1]

    # -- ring structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if not _scalar(other):
                return NotImplemented
            other = LaurentPolynomial._raw(0, [other])
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        vec = [0] * (hi - lo)
        off = self.low - lo
        for k, c in enumerate(self.coeffs):
            vec[off + k] = c
        off = other.low - lo
        for k, c in enumerate(other.coeffs):
            vec[off + k] += c
        while vec and not vec[-1]:
            vec.pop()
        return LaurentPolynomial._raw(lo, vec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if not _scalar(other):
                return NotImplemented
            other = LaurentPolynomial._raw(0, [other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if not _scalar(other):
                return NotImplemented
            if not other:
                return LaurentPolynomial()
            return LaurentPolynomial._raw(self.low, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return LaurentPolynomial()
        return LaurentPolynomial._raw(self.low + other.low,
                                      kernels.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent-polynomial inverses")
            inv = _div(1, self.coeffs[0])
            return LaurentPolynomial._raw(self.low * k, [inv ** (-k)])
        result, base = LaurentPolynomial._raw(0, [1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial.

        Inexact polynomial division raises ``ValueError``; use
        ``RationalFunction`` for the field of fractions.
        """
        if _scalar(other):
            if isinstance(other, Cyclotomic):
                inv = other.inverse()
                return self * inv
            return LaurentPolynomial._raw(self.low, [_div(c, other) for c in self.coeffs])
        if isinstance(other, LaurentPolynomial):
            quot = self.exact_div(other)
            if quot is None:
                raise ValueError(f"{other} does not divide {self}")
            return quot
        return NotImplemented

    def exact_div(self, other: "LaurentPolynomial"):
        """The Laurent polynomial self/other, or None if it does not exist."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        quot = kernels.divexact(list(self.coeffs), list(other.coeffs))
        if quot is None:
            return None
        return LaurentPolynomial._raw(self.low - other.low, quot)

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.low == other.low and self.coeffs == other.coeffs
        if _scalar(other):
            if not other:
                return not self.coeffs
            return self.low == 0 and self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.low, self.coeffs))
        return self._hash

    # -- operations specific to this setting ------------------------------
    def star(self) -> "LaurentPolynomial":
        """Substitute q -> q^-1."""
        if not self.coeffs:
            return self
        return LaurentPolynomial._raw(-self.degree, list(reversed(self.coeffs)))

    def conj(self) -> "LaurentPolynomial":
        """Conjugate coefficients; q itself is treated as real."""
        return LaurentPolynomial._raw(self.low, [conj(c) for c in self.coeffs])

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return LaurentPolynomial._raw(self.low + k, list(self.coeffs))

    def qprime_split(self) -> tuple[int, "LaurentPolynomial"]:
        """Return (e, g) with self = q^e g and g(0) != 0."""
        if not self.coeffs:
            raise ValueError("qprime_split of the zero polynomial")
        return self.low, LaurentPolynomial._raw(0, list(self.coeffs))

    def evaluate(self, q0):
        """Exact value at q = q0."""
        if not self.coeffs:
            return 0
        if q0 == 0 and self.low < 0:
            raise ZeroBaseError("negative power of q at q = 0")
        if isinstance(q0, Rational) and not isinstance(q0, Fraction):
            q0 = int(q0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        if self.low >= 0:
            return _norm(acc * q0 ** self.low) if self.low else _norm(acc)
        return _norm(Fraction(acc) / Fraction(q0) ** (-self.low)) if not isinstance(acc, Cyclotomic) \
            else acc / Fraction(q0) ** (-self.low)

    def map_coefficients(self, f) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple(f(c) for c in self.coeffs), self.low)

    def content_is_integral(self) -> bool:
        return all(type(c) is int for c in self.coeffs)

    # -- display and serialization ----------------------------------------
    def __repr__(self):
        return self.to_string()

    def to_string(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.items()):
            coef = f"({c})" if isinstance(c, Cyclotomic) or isinstance(c, Fraction) else str(c)
            if e == 0:
                mono = coef
            else:
                power = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    mono = power
                elif c == -1:
                    mono = "-" + power
                else:
                    mono = f"{coef}*{power}"
            parts.append(mono)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        """Sparse [[exponent, coefficient], ...] with exact coefficients."""
        from .scalars import scalar_to_json
        return [[e, scalar_to_json(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPolynomial":
        from .scalars import scalar_from_json
        return cls.from_dict({int(e): scalar_from_json(c) for e, c in data})


def _div(c, d):
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        return q if not r else Fraction(c, d)
    return c / d


def as_poly(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if _scalar(x):
        return LaurentPolynomial._raw(0, [x])
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


Q = LaurentPolynomial.q()
