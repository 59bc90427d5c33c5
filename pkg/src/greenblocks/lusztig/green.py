"""Generalized Green functions and the calculus around them.

A class function theta on W_G(L) is sent by Q^G to sum_i <theta, phi_i> X~_i;
in the Y~ basis its coefficients are <theta, Q~_i>, and X~_g = sum_i P~_{i,g} Y~_i
gives y = P~ x.  The Green function Q_w = Q^G(gamma_w) has Y~-coefficients
Q~_i(w), and its value at a unipotent u of support C_i is
sum_{j on C_i} Q~_j(w) q^{c_j} Y_j(u).

>>> from greenblocks.blocks import gl_principal_block
>>> from greenblocks.lusztig import factorize
>>> t = factorize(gl_principal_block(2))
>>> g = green_function(t, "1+1")
>>> g.value("1+1"), g.value("2")
(q + 1, 1)
>>> scalar_product_green(t, "1+1", "1+1")
2/(q^2 - 2*q + 1)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactalg import LaurentPolynomial, RationalFunction, as_ratfunc
from ..weyl import ClassFunction, inner_product, torus_order_function
from .algorithm import GreenTable, RZERO, ZERO

__all__ = ["GreenFunction", "green_function", "qg_transport", "x_to_y", "duality", "duality_y",
           "scalar_product_green", "torus_order", "ytilde_value", "qtilde_gram", "qg_scalar_product"]


def torus_order(t: GreenTable) -> ClassFunction:
    """Z(w) = |Z_L^0wF| = (q-1)^(dim Z_L - l) det(qI - M(w))."""
    return torus_order_function(t.block.W, t.block.dim_zl)


def _as_int_shift(c) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError("q^c with half-integral c: only differences of c are integral")
        return c.numerator
    return c


def ytilde_value(t: GreenTable, i: int, support: str, a: int = 0):
    """Y~_i(u) = q^(c_i) Y_i(u) at the A(u)-class a of a unipotent u with the given support.

    Without a Y-table every local system is taken to be trivial (the GL_n case).
    For half-integral c (SL_n with d even) the power q^c is returned via the
    integral offset c_i - c_min of the block, and the caller must supply the
    common factor q^c_min.
    """
    b = t.block
    p = b.pairs[i]
    if p.support != support:
        return 0
    if b.y_table is None:
        y = 1
    else:
        y = b.y_table.row(p.id)[a]
    c = p.c
    if isinstance(c, Fraction) and c.denominator != 1:
        c = c - min(pp.c for pp in b.pairs)
    return LaurentPolynomial.q(_as_int_shift(c)) * y


@dataclass(frozen=True)
class GreenFunction:
    """Y~-coefficients of Q_w: the entry at i is Q~_i(w)."""
    table: GreenTable
    w: str
    coeffs: tuple

    def value(self, support: str, a: int = 0):
        """Q_w at a unipotent with the given support (A(u)-class a)."""
        acc = ZERO
        for i, c in enumerate(self.coeffs):
            if c and self.table.block.pairs[i].support == support:
                acc = acc + c * ytilde_value(self.table, i, support, a)
        return acc

    def to_json(self):
        return {"w": self.w, "coefficients": {pid: c.to_json()
                                              for pid, c in zip(self.table.block.ids, self.coeffs)}}


def green_function(t: GreenTable, w) -> GreenFunction:
    W = t.block.W
    c = W.class_index(w)
    return GreenFunction(t, W.class_names[c], tuple(f.values[c] for f in t.qtilde))


def x_to_y(t: GreenTable, x) -> list:
    """Y~-coefficients from X~-coefficients: y = P~ x."""
    out = []
    for row in t.ptilde:
        acc = ZERO
        for p, v in zip(row, x):
            if p and v:
                acc = acc + p * v
        out.append(acc)
    return out


def qg_transport(t: GreenTable, theta: ClassFunction):
    """(X~-coefficients, Y~-coefficients) of Q^G(theta).

    Both are computed independently (inner products with phi_i and with Q~_i)
    and checked against y = P~ x.
    """
    if theta.group is not t.block.W:
        raise ValueError("class function does not live on the block's Weyl group")
    x = [_poly(inner_product(theta, phi)) for phi in t.phis]
    y = [_poly(inner_product(theta, qt)) for qt in t.qtilde]
    if x_to_y(t, x) != y:
        raise AssertionError("Y~-coefficients disagree with P~ applied to X~-coefficients")
    return x, y


def _poly(v):
    if isinstance(v, RationalFunction):
        return v.as_laurent() if v.is_laurent() else v
    if isinstance(v, LaurentPolynomial):
        return v
    return LaurentPolynomial.constant(v) if v else ZERO


def duality(t: GreenTable, x, eta: int = 1) -> list:
    """Alvis-Curtis duality on X~-coefficients: entry at hat(i) is eta * eps_i * x_i (eps_i = 1 when split)."""
    out = [ZERO] * len(x)
    for i, v in enumerate(x):
        out[t.block.hat[i]] = v * (eta * t.block.pairs[i].eps) if v else ZERO
    return out


def duality_y(t: GreenTable, y, eta: int = 1) -> list:
    """Duality on Y~-coefficients, through X~ = P~^-1 y."""
    x = []
    for row in t.pinv:
        acc = ZERO
        for p, v in zip(row, y):
            if p and v:
                acc = acc + p * v
        x.append(acc)
    return x_to_y(t, duality(t, x, eta))


def scalar_product_green(t: GreenTable, w, w2):
    """<Q_w, Q_w'> over G^F, through the Gram matrix Lambda of the Y~ basis."""
    W = t.block.W
    a, b = W.class_index(w), W.class_index(w2)
    lam = t.lam_group
    acc = RZERO
    for grp in t.block.groups:
        for i in grp:
            qi = t.qtilde[i].values[a]
            if not qi:
                continue
            for k in grp:
                if lam[i][k]:
                    qk = t.qtilde[k].values[b]
                    if qk:
                        acc = acc + lam[i][k] * (qi * qk.conj())
    return acc


def qtilde_gram(t: GreenTable) -> list:
    """<Zbar Q~_i, Q~_g> over W: should equal the normalized Lambda^-1."""
    W = t.block.W
    zbar = ClassFunction(W, W.charpolys)
    out = []
    for qi in t.qtilde:
        zi = zbar * qi
        out.append([_poly(inner_product(zi, qg)) for qg in t.qtilde])
    return out


def qg_scalar_product(t: GreenTable, theta: ClassFunction, phi: ClassFunction):
    """<Q^G(theta), Q^G(phi)> over G^F computed through the X~ Gram matrix Xi (group level)."""
    x, _ = qg_transport(t, theta)
    y, _ = qg_transport(t, phi)
    z = as_ratfunc(t.center_order)
    acc = RZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        for k, yk in enumerate(y):
            if yk and t.xi_num[i][k]:
                acc = acc + as_ratfunc(xi * t.xi_num[i][k] * yk.conj())
    return acc / (as_ratfunc(t.xi_den) * z)
