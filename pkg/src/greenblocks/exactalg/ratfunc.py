"""Rational functions in q with a unique canonical representation.

Every nonzero rational function is written num/den where den is an ordinary
monic polynomial with nonzero constant term and num is a Laurent polynomial
whose q-free part is coprime to den.  Powers of q therefore live in the
numerator (1/q is stored as q^-1 over 1).  Equal values have equal
representations.

>>> q = LaurentPolynomial.q()
>>> RationalFunction(q**2 - 1, q - 1)
q + 1
>>> RationalFunction(2 * q, 2 * q**2 - 2)
q/(q^2 - 1)
"""
from __future__ import annotations

from fractions import Fraction

from . import kernels
from .cyclotomic import Cyclotomic
from .laurent import LaurentPolynomial, PoleError, as_poly

__all__ = ["RationalFunction", "as_ratfunc"]

_ONE = LaurentPolynomial.constant(1)


def _ordinary(coeffs) -> LaurentPolynomial:
    return LaurentPolynomial._raw(0, list(coeffs))


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = as_poly(num)
        den = _ONE if den is None else as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPolynomial(), _ONE
            return
        e, d = den.qprime_split()
        f, n = num.qprime_split()
        shift = f - e
        if len(d.coeffs) > 1 and len(n.coeffs) > 1:
            g = kernels.gcd(list(n.coeffs), list(d.coeffs))
            if len(g) > 1:
                n = _ordinary(kernels.divexact(list(n.coeffs), g))
                d = _ordinary(kernels.divexact(list(d.coeffs), g))
        lead = d.coeffs[-1]
        if lead != 1:
            n, d = n / lead, d / lead
        self.num, self.den = n.shift(shift), d

    @classmethod
    def _canonical(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def as_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    # -- field operations -----------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den == _ONE:
            return RationalFunction(self.num * other.den + other.num, other.den)
        if other.den == _ONE:
            return RationalFunction(self.num + other.num * self.den, self.den)
        g = _ordinary(kernels.gcd(list(self.den.coeffs), list(other.den.coeffs)))
        a = self.den.exact_div(g)
        b = other.den.exact_div(g)
        return RationalFunction(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._canonical(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not other:
                return RationalFunction(0)
            return RationalFunction._canonical(self.num * other, self.den)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(self.num) if self.den == _ONE else hash((self.num, self.den))

    # -- involutions and evaluation -------------------------------------
    def star(self) -> "RationalFunction":
        return RationalFunction(self.num.star(), self.den.star())

    def conj(self) -> "RationalFunction":
        return RationalFunction(self.num.conj(), self.den.conj())

    def evaluate(self, q0):
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleError(f"pole of {self} at q = {q0}")
        n = self.num.evaluate(q0)
        if isinstance(n, Cyclotomic) or isinstance(d, Cyclotomic):
            return n / d
        value = Fraction(n) / Fraction(d)
        return value.numerator if value.denominator == 1 else value

    def __repr__(self):
        if self.den == _ONE:
            return repr(self.num)
        n = repr(self.num)
        if len(self.num.items()) > 1:
            n = f"({n})"
        return f"{n}/({self.den!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        return cls(LaurentPolynomial.from_json(data["num"]), LaurentPolynomial.from_json(data["den"]))


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPolynomial):
        return RationalFunction._canonical(x, _ONE)
    if isinstance(x, (int, Fraction, Cyclotomic)):
        return RationalFunction._canonical(LaurentPolynomial.constant(x), _ONE)
    return None


def as_ratfunc(x) -> RationalFunction:
    r = _coerce(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as a rational function")
    return r
