"""Order polynomials, centralizer orders and the star identities they satisfy.

A group is described by a small ``GroupType``: GL_n, SL_n, the torus T_w of
GL_n for a permutation w of given cycle type, or a product of these.  For every
such H the order is a polynomial in q with

    |H^F|(q^-1) = q^-dim H eps_H |H^F|_{q'},   eps_H = (-1)^(F_q-rank H).

>>> order_polynomial(GroupType.parse("GL2"))
q^4 - q^3 - q^2 + q
>>> order_polynomial(GroupType.parse("T[3]"))
q^3 - 1
>>> order_star_identity(GroupType.parse("GL2 x T[2,1]"))
True
>>> centralizer_order("GL", (2,))
q^2 - q
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod

from ..exactalg import LaurentPolynomial
from ..weyl import WeylGroupModel
from ..weyl.partitions import conjugate

__all__ = ["GroupType", "order_polynomial", "order_star_identity", "centralizer_order",
           "centralizer_sign", "zfunction_star_holds", "qprime_part"]

Q1 = LaurentPolynomial.q(1)
ONE = LaurentPolynomial.constant(1)


@dataclass(frozen=True)
class GroupType:
    kind: str                  # "GL", "SL", "T" or "x"
    n: int = 0
    cycles: tuple = ()         # cycle type of w for a torus T_w of GL_n
    factors: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        parts = [p.strip() for p in text.split(" x ")]
        if len(parts) > 1:
            return cls("x", factors=tuple(cls.parse(p) for p in parts))
        t = parts[0]
        if m := re.fullmatch(r"(GL|SL)(\d+)", t):
            return cls(m.group(1), int(m.group(2)))
        if m := re.fullmatch(r"T\[(\d+(?:,\d+)*)\]", t):
            cyc = tuple(sorted((int(x) for x in m.group(1).split(",")), reverse=True))
            return cls("T", sum(cyc), cyc)
        raise ValueError(f"unsupported group {text!r}")

    @property
    def dim(self) -> int:
        return {"GL": lambda: self.n ** 2, "SL": lambda: self.n ** 2 - 1, "T": lambda: self.n,
                "x": lambda: sum(f.dim for f in self.factors)}[self.kind]()

    @property
    def fq_rank(self) -> int:
        return {"GL": lambda: self.n, "SL": lambda: self.n - 1, "T": lambda: len(self.cycles),
                "x": lambda: sum(f.fq_rank for f in self.factors)}[self.kind]()

    @property
    def eps(self) -> int:
        return (-1) ** self.fq_rank

    def __str__(self):
        if self.kind == "x":
            return " x ".join(map(str, self.factors))
        if self.kind == "T":
            return "T[" + ",".join(map(str, self.cycles)) + "]"
        return f"{self.kind}{self.n}"


def _gl_order(n: int) -> LaurentPolynomial:
    return Q1 ** (n * (n - 1) // 2) * prod((Q1 ** k - 1 for k in range(1, n + 1)), start=ONE)


def order_polynomial(h: GroupType) -> LaurentPolynomial:
    if h.kind == "GL":
        return _gl_order(h.n)
    if h.kind == "SL":
        return _gl_order(h.n).exact_div(Q1 - 1)
    if h.kind == "T":
        return prod((Q1 ** c - 1 for c in h.cycles), start=ONE)
    if h.kind == "x":
        return prod((order_polynomial(f) for f in h.factors), start=ONE)
    raise ValueError(f"unsupported group kind {h.kind!r}")


def qprime_part(f: LaurentPolynomial) -> LaurentPolynomial:
    """The part prime to q: f divided by its lowest power of q."""
    return f.qprime_split()[1]


def order_star_identity(h: GroupType) -> bool:
    f = order_polynomial(h)
    return f.star() == qprime_part(f).shift(-h.dim) * h.eps


def centralizer_order(group: str, lam, q: int | None = None):
    """|C_H(u)| for u unipotent of Jordan type lam in H = GL_n or SL_n.

    GL_n: q^(sum lam'_j^2) prod_i prod_{k<=m_i} (1 - q^-k), m_i the multiplicity
    of the part i.  For SL_n the class of type lam splits into gcd(lam, q-1)
    classes with centralizer g |C_GL(u)| / (q-1), g = gcd(lam, q-1); with q
    omitted the split case q = 1 mod n is assumed (g = gcd of the parts).
    """
    lam = tuple(sorted(lam, reverse=True))
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    f = Q1 ** sum(x * x for x in conjugate(lam))
    for m in mult.values():
        for k in range(1, m + 1):
            f = f * (1 - Q1 ** (-k))
    if group == "GL":
        return f if q is None else f.evaluate(q)
    if group == "SL":
        g = 0
        for p in lam:
            g = gcd(g, p)
        if q is not None:
            return f.evaluate(q) * gcd(g, q - 1) // (q - 1)
        return f.exact_div(Q1 - 1) * g
    raise ValueError(f"unsupported group {group!r}")


def centralizer_sign(group: str, lam) -> int:
    """eps_{C(u)}: the reductive part of C_GL(u) is prod GL_{m_i}, of F_q-rank l(lam)."""
    r = len(lam)
    return (-1) ** (r if group == "GL" else r - 1)


def zfunction_star_holds(W: WeylGroupModel) -> bool:
    """star(Zbar)(w) = (-1)^l q^-l eps(w) Zbar(w) with Zbar(w) = det(qI - M(w)), every class."""
    l = W.rank
    sgn = W.sign()
    for c, p in enumerate(W.charpolys):
        if p.star() != p.shift(-l) * ((-1) ** l * sgn.values[c]):
            return False
    return True
