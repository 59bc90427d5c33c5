"""Pure-Python dense polynomial kernels.

Polynomials are lists of coefficients, constant term first, with no trailing
zeros (the zero polynomial is ``[]``).  Coefficients are ints, Fractions or
cyclotomic numbers; the kernels only use ring operations and exact division.
The compiled module ``_ckernels`` exposes the same five functions.
"""
from fractions import Fraction
from math import gcd as _igcd

__all__ = ["mul", "divmod_", "divexact", "gcd", "trim"]


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _div(x, y):
    if type(x) is int and type(y) is int:
        q, r = divmod(x, y)
        return q if not r else Fraction(x, y)
    return x / y


def mul(a, b):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return trim(res)


def divmod_(a, b):
    """Quotient and remainder of a by b over the coefficient field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    a = list(a)
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = a[k + db]
        if c:
            t = _div(c, lead)
            quot[k] = t
            for j in range(db):
                a[k + j] -= t * b[j]
            a[k + db] = 0
    return trim(quot), trim(a[:db])


def divexact(a, b):
    """a / b when b divides a exactly, otherwise None."""
    quot, rem = divmod_(a, b)
    return None if rem else quot


def _is_rational(a):
    return all(type(c) is int or isinstance(c, Fraction) for c in a)


def _primitive(a):
    """Integer primitive part with positive leading coefficient."""
    den = 1
    for c in a:
        if isinstance(c, Fraction):
            den = den * c.denominator // _igcd(den, c.denominator)
    a = [int(c * den) for c in a]
    g = 0
    for c in a:
        g = _igcd(g, c)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _prem(a, b):
    """Pseudo-remainder of integer polynomials, made primitive after each step."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        trim(a)
        if not a:
            return a
        g = 0
        for x in a:
            g = _igcd(g, x)
            if g == 1:
                break
        if g > 1:
            a = [x // g for x in a]
    return a


def gcd(a, b):
    """Monic greatest common divisor; [] if both inputs vanish."""
    a, b = trim(list(a)), trim(list(b))
    if not a:
        a, b = b, a
    if not a:
        return []
    if not b:
        return [_div(c, a[-1]) for c in a]
    if _is_rational(a) and _is_rational(b):
        a, b = _primitive(a), _primitive(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _prem(a, b)
            a, b = b, (_primitive(r) if r else r)
    else:
        while b:
            _, r = divmod_(a, b)
            a, b = b, r
    lead = a[-1]
    return [_div(c, lead) for c in a]
