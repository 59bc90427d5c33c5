"""Generalized Gelfand-Graev characters of GL_n(F_p), n <= 3, by direct summation.

For u of Jordan type lam take the weight grading of its Jacobson-Morozov
cocharacter: a Jordan block of size k carries weights k-1, k-3, ..., 1-k.
U_2 is 1 + (weight >= 2 part), and psi_u(1 + X) = chi0(sum of X over the
positions of u - 1).  Then

    Gamma_u = p^(-dim g(1)/2) Ind_{U_2}^G psi_u,

and at a unipotent x its value is |C(x)| / |U_2| p^(-dim g(1)/2) sum psi_u(y),
the sum over y in U_2 conjugate to x.  For GL_n the psi-histogram over each
class is flat on the nonzero residues, so the values are rational integers.

>>> induced_ggg(2, 3, "2")
{'1+1': 16, '2': -2}
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from .cache import cached
from .matgroups import FiniteMatrixGroup, enumerate_unipotent, jordan_types

__all__ = ["induced_ggg", "grading"]


def grading(lam: str):
    """(weights in basis order, positions of U_2, positions of u - 1, dim g(1))."""
    parts = [int(x) for x in lam.split("+")]
    basis = []
    for blk, k in enumerate(parts):
        for j in range(k):
            basis.append((k - 1 - 2 * j, blk, j))
    basis.sort(key=lambda b: (-b[0], b[1]))
    w = [b[0] for b in basis]
    n = len(basis)
    u2 = [(a, b) for a in range(n) for b in range(n) if w[a] - w[b] >= 2]
    g1 = sum(1 for a in range(n) for b in range(n) if w[a] - w[b] == 1)
    where = {(blk, j): i for i, (_, blk, j) in enumerate(basis)}
    e = [(where[(blk, j)], where[(blk, j + 1)]) for blk, k in enumerate(parts) for j in range(k - 1)]
    return w, u2, e, g1


def _compute(n: int, p: int, lam: str) -> dict:
    g = FiniteMatrixGroup("GL", n, p)
    cent = {c.jordan: c.centralizer for c in enumerate_unipotent(g)}
    _, u2, e, g1 = grading(lam)
    if g1 % 2:
        raise AssertionError("dim g(1) is odd")
    size = p ** len(u2)
    ys = np.zeros((size, n, n), dtype=np.int8)
    for i in range(n):
        ys[:, i, i] = 1
    ts = np.zeros(size, dtype=np.int64)
    for r, vals in enumerate(product(range(p), repeat=len(u2))):
        for (a, b), v in zip(u2, vals):
            ys[r, a, b] = v
            if (a, b) in e:
                ts[r] += v
    ts %= p
    types = jordan_types(ys, p)
    hist: dict = {}
    for t, s in zip(types, ts):
        hist.setdefault(t, [0] * p)[int(s)] += 1
    out = {}
    for label in cent:
        h = hist.get(label, [0] * p)
        if len(set(h[1:])) > 1:
            raise AssertionError(f"psi-histogram of class {label} is not flat on F_p^*")
        s = h[0] - (h[1] if p > 1 else 0)
        v = Fraction(cent[label] * s, size) / Fraction(p) ** (g1 // 2)
        if v.denominator != 1:
            raise AssertionError(f"non-integral Gelfand-Graev value at {label}")
        out[label] = int(v)
    return out


def induced_ggg(n: int, p: int, lam: str) -> dict:
    """Values of Gamma_u (u of Jordan type lam) at the unipotent classes of GL_n(F_p)."""
    return cached("induced-ggg", {"n": n, "p": p, "lam": lam}, lambda: _compute(n, p, lam))
