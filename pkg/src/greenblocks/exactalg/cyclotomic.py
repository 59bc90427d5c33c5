"""Exact elements of cyclotomic fields Q(zeta_N).

An element is stored by its coordinates in the power basis 1, z, ..., z^(m-1)
with m = phi(N), i.e. reduced modulo the N-th cyclotomic polynomial.  Those
coordinates are unique, so equality and hashing are coordinatewise.

>>> z = Cyclotomic.zeta(4)
>>> z * z
-1
>>> (z + 1) * (z.conj() + 1)
2
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "euler_phi", "conj", "is_rational"]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact_int(a, b):
    """Quotient of integer polynomials (low degree first), b monic, exact."""
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = a[k + db]
        quot[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    assert not any(a), "inexact cyclotomic division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact_int(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _rat(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _reduce(vec, n):
    """Reduce a vector indexed by exponents modulo z^n = 1 and Phi_n."""
    full = [0] * n
    for k, c in enumerate(vec):
        if c:
            full[k % n] += c
    phi = cyclotomic_polynomial(n)
    m = len(phi) - 1
    for k in range(n - 1, m - 1, -1):
        c = full[k]
        if c:
            for j in range(m + 1):
                full[k - m + j] -= c * phi[j]
    return tuple(_rat(c) for c in full[:m])


def _make(coeffs, n):
    """Build an element, demoting to a plain rational when possible."""
    if not any(coeffs[1:]):
        return coeffs[0] if coeffs else 0
    obj = object.__new__(Cyclotomic)
    obj.conductor = n
    obj.coeffs = coeffs
    return obj


class Cyclotomic:
    """An element of Q(zeta_N) that is not known to be rational.

    Arithmetic returns ``int`` or ``Fraction`` whenever the result is
    rational, so rational-valued code never pays for the field.
    """

    __slots__ = ("conductor", "coeffs")

    def __new__(cls, coeffs, conductor):
        conductor = int(conductor)
        return _make(_reduce([_rat(Fraction(c)) for c in coeffs], conductor), conductor)

    @classmethod
    def zeta(cls, n: int, k: int = 1):
        vec = [0] * n
        vec[k % n] = 1
        return _make(_reduce(vec, n), n)

    # -- coercion -------------------------------------------------------
    def _lift(self, n):
        if n == self.conductor:
            return self.coeffs
        step = n // self.conductor
        vec = [0] * (step * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            vec[k * step] = c
        return _reduce(vec, n)

    def _common(self, other):
        if isinstance(other, Cyclotomic):
            n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
            return n, self._lift(n), other._lift(n)
        if isinstance(other, (int, Fraction)):
            n = self.conductor
            vec = [0] * len(self.coeffs)
            vec[0] = other
            return n, self.coeffs, tuple(vec)
        return None

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        c = self._common(other)
        if c is None:
            return NotImplemented
        n, a, b = c
        return _make(tuple(_rat(x + y) for x, y in zip(a, b)), n)

    __radd__ = __add__

    def __neg__(self):
        return _make(tuple(-x for x in self.coeffs), self.conductor)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _make(tuple(_rat(x * other) for x in self.coeffs), self.conductor) if other else 0
        c = self._common(other)
        if c is None:
            return NotImplemented
        n, a, b = c
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _make(_reduce(prod, n), n)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm against Phi_N."""
        n = self.conductor
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = [Fraction(c) for c in self.coeffs]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _fdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        inv = [c / r1[0] for c in s1]
        return _make(_reduce(inv, n), n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return _make(tuple(_rat(Fraction(x) / other) for x in self.coeffs), self.conductor)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = 1, self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure ------------------------------------------------------
    def conj(self):
        """Complex conjugation: the Galois automorphism z -> z^-1."""
        n = self.conductor
        vec = [0] * n
        for k, c in enumerate(self.coeffs):
            vec[(-k) % n] += c
        return _make(_reduce(vec, n), n)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            c = self._common(other)
            return c[1] == c[2]
        if isinstance(other, (int, Fraction)):
            return False  # rational values never survive as Cyclotomic
        return NotImplemented

    def __hash__(self):
        # hash the representative over the smallest subfield Q(z_d) containing it,
        # so that equal elements stored with different conductors agree
        return hash(("cyc",) + _minimal_form(self.coeffs, self.conductor))

    def __bool__(self):
        return True

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.conductor}^{k}" if k else f"{c}")
        return " + ".join(terms)

    def to_json(self):
        return {"conductor": self.conductor,
                "coeffs": [str(c) if isinstance(c, Fraction) else c for c in self.coeffs]}


def _fmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _fsub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _fdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / b[-1]
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


@lru_cache(maxsize=4096)
def _minimal_form(coeffs, n):
    """(d, coordinates) over the smallest Q(z_d) containing the element."""
    for d in range(1, n):
        if n % d:
            continue
        step = n // d
        basis = [_reduce([0] * (j * step) + [1], n) for j in range(euler_phi(d))]
        sol = _solve_columns(basis, coeffs)
        if sol is not None:
            return d, tuple(sol)
    return n, coeffs


def _solve_columns(cols, target):
    """Solve sum x_j cols[j] = target over Q, or return None."""
    m, k = len(target), len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    piv_cols, r = [], 0
    for c in range(k):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] for i in range(r, m)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][k]
    return [_rat(x) for x in sol]


def conj(x):
    """Complex conjugation on exact scalars (identity on rationals)."""
    return x.conj() if isinstance(x, Cyclotomic) else x


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))
