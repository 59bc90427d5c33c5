"""Generalized Gelfand-Graev characters on the unipotent set of a block.

With zeta = 1 the normalized character of a pair is

    Gamma~_i = Q^G(sgn Z Q~_i^*),

so its X~-coefficient at k is <sgn Z Q~_i^*, phi_k> over W and its
Y~-coefficients follow through P~.  Duality acts as eta_L sgn on the W side.

>>> from greenblocks.blocks import gl_principal_block
>>> from greenblocks.lusztig import factorize
>>> t = factorize(gl_principal_block(2))
>>> g = gamma_tilde(t, "2")
>>> g.x
[q^2 - q, -q + 1]
>>> g.value("1+1"), g.value("2")
(q^3 - q^2 - q + 1, -q + 1)
>>> ggg_gram(t, "2", "2")
-q + 1
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..blocks import BlockDescriptor
from ..exactalg import LaurentPolynomial, RationalFunction, conj
from ..lusztig import GreenTable, qg_transport, torus_order, ytilde_value
from ..lusztig.algorithm import ZERO
from ..weyl import ClassFunction, inner_product
from ..weyl.partitions import parse_partition
from .orders import centralizer_order, centralizer_sign

__all__ = ["SignData", "GGGExpansion", "gamma_tilde", "gamma_u_projection", "ggg_gram",
           "ggg_orthogonality_u", "allorth_sum", "allorth_expected", "evaluate_y"]


@dataclass(frozen=True)
class SignData:
    """eps_G, eps_L, eps_{Z_L}, eta_L, sigma_G and the unit zeta (1 in split scope)."""
    eps_G: int
    eps_L: int
    eps_ZL: int
    eta_L: int
    sigma_G: int
    eps_ZG: int
    zeta: int = 1

    @classmethod
    def from_block(cls, b: BlockDescriptor) -> "SignData":
        if b.rank is None:
            raise ValueError(f"block {b.name} does not record the F_q-rank of G")
        eps_G = (-1) ** b.rank
        eps_ZL = (-1) ** b.dim_zl
        eps_ZG = (-1) ** b.central_rank
        # split: eps_L = eps_G, and the semisimple rank of L is rank - dim Z_L
        s = cls(eps_G=eps_G, eps_L=eps_G, eps_ZL=eps_ZL, eta_L=(-1) ** (b.rank - b.dim_zl),
                sigma_G=(-1) ** (b.rank - b.central_rank), eps_ZG=eps_ZG)
        s.check()
        return s

    @property
    def eta_G(self) -> int:
        return self.sigma_G

    @property
    def zeta_tilde(self) -> int:
        # eta_L sigma_L zeta with sigma_L = eta_L when L is split
        return self.eta_L * self.eta_L * self.zeta

    def check(self) -> None:
        if self.eta_G != self.eps_G * self.eps_ZG:
            raise AssertionError("eta_G != eps_G eps_Z_G")
        if self.eta_L != self.eps_L * self.eps_ZL:
            raise AssertionError("eta_L != eps_L eps_Z_L")


def evaluate_y(t: GreenTable, y, support: str, a: int = 0):
    """Value at a unipotent with the given support of the function with Y~-coefficients y."""
    acc = ZERO
    for j, c in enumerate(y):
        if c and t.block.pairs[j].support == support:
            acc = acc + c * ytilde_value(t, j, support, a)
    return acc


@dataclass(frozen=True)
class GGGExpansion:
    table: GreenTable
    index: int
    x: list                  # X~-coefficients
    y: list                  # Y~-coefficients, y = P~ x

    def value(self, support: str, a: int = 0):
        return evaluate_y(self.table, self.y, support, a)

    def to_json(self):
        ids = self.table.block.ids
        return {"pair": ids[self.index],
                "X": {i: c.to_json() for i, c in zip(ids, self.x) if c},
                "Y": {i: c.to_json() for i, c in zip(ids, self.y) if c}}


def _sgn_z(t: GreenTable) -> ClassFunction:
    W = t.block.W
    return W.sign() * torus_order(t)


def gamma_tilde(t: GreenTable, i) -> GGGExpansion:
    i = t.block.index(i)
    theta = _sgn_z(t) * t.qtilde[i].star()
    x, y = qg_transport(t, theta)
    return GGGExpansion(t, i, x, y)


def _conj_star(v):
    return v.star().conj() if hasattr(v, "star") else conj(v)


def gamma_u_projection(t: GreenTable, support: str, a: int = 0, check: bool = True) -> list:
    """Y~-coefficients of Gamma~_u^I = sum_i conj(star(Y~_i(u))) Gamma~_i.

    The second route transports sgn Z conj(star(Q_-(u))), where Q_-(u) is the
    class function w -> Q_w(u).  Zero when no pair of the block lives on u.
    """
    b = t.block
    on = [i for i, p in enumerate(b.pairs) if p.support == support]
    y = [ZERO] * b.size
    for i in on:
        coef = _conj_star(ytilde_value(t, i, support, a))
        for k, v in enumerate(gamma_tilde(t, i).y):
            if v:
                y[k] = y[k] + v * coef
    if check and on:
        W = b.W
        qminus = [sum((t.qtilde[j].values[c] * ytilde_value(t, j, support, a) for j in on), ZERO)
                  for c in range(W.num_classes)]
        theta = _sgn_z(t) * ClassFunction(W, [_conj_star(v) for v in qminus])
        if qg_transport(t, theta)[1] != y:
            raise AssertionError("the two routes to Gamma~_u disagree")
    return y


def _as_poly(v):
    if isinstance(v, RationalFunction):
        if not v.is_laurent():
            raise AssertionError(f"expected a Laurent polynomial, got {v}")
        return v.as_laurent()
    if isinstance(v, LaurentPolynomial):
        return v
    return LaurentPolynomial.constant(v) if v else ZERO


def ggg_gram(t: GreenTable, i, k, route: str = "all"):
    """<Gamma~_i, D Gamma~_k> over G^F.

    "lambda": eps_G q^dim Z_L star((Y~-Gram)^-1)_{ik};
    "qside":  eta_L <Q~_i^*, sgn Z Q~_k^*> over W;
    "xi":     the X~ expansions paired through Xi, with D acting on X~.
    "all" computes the three and insists that they agree.
    """
    b = t.block
    i, k = b.index(i), b.index(k)
    signs = SignData.from_block(b)
    out = {}
    if route in ("lambda", "all"):
        inv = _as_poly(t.lam_inv[i][k]) * t.center_order
        out["lambda"] = inv.star().shift(b.dim_zl) * signs.eps_G
    if route in ("qside", "all"):
        v = inner_product(t.qtilde[i].star(), _sgn_z(t) * t.qtilde[k].star())
        out["qside"] = _as_poly(v) * signs.eta_L
    if route in ("xi", "all"):
        from ..lusztig import duality
        from ..exactalg import as_ratfunc
        gi, gk = gamma_tilde(t, i), gamma_tilde(t, k)
        dk = duality(t, gk.x, signs.eta_L)
        acc = as_ratfunc(0)
        for r, xr in enumerate(gi.x):
            if not xr:
                continue
            for s, xs in enumerate(dk):
                if xs and t.xi_num[r][s]:
                    acc = acc + as_ratfunc(xr * t.xi_num[r][s] * xs.conj())
        out["xi"] = _as_poly(acc / (as_ratfunc(t.xi_den) * as_ratfunc(t.center_order)))
    vals = list(out.values())
    if any(v != vals[0] for v in vals):
        raise AssertionError(f"ggg_gram routes disagree: {out}")
    return vals[0]


def _parse_u(u):
    return (u, 0) if isinstance(u, str) else (u[0], u[1])


def ggg_orthogonality_u(tables, u, v):
    """(lhs, rhs) for <Gamma_u, D Gamma_v> over G^F, G = GL_n or SL_n.

    lhs sums q^(c_i + c_k) <Gamma~_u^I, D Gamma~_v^I> over the given blocks;
    rhs is eps_G eps_{C(u)} |C(u)|_{q'} when u and v are conjugate, else 0.
    A unipotent is named by its support label, or (label, a) for A(u)-class a.
    """
    tables = list(tables)
    (su, au), (sv, av) = _parse_u(u), _parse_u(v)
    lhs = ZERO
    for t in tables:
        b = t.block
        iu = [i for i, p in enumerate(b.pairs) if p.support == su]
        iv = [i for i, p in enumerate(b.pairs) if p.support == sv]
        if not iu or not iv:
            continue
        cu = {i: _conj_star(ytilde_value(t, i, su, au)) for i in iu}
        cv = {k: _conj_star(ytilde_value(t, k, sv, av)) for k in iv}
        # the common offset of half-integral c cancels between q^c and cu, cv
        wu, wv = _qc(t, iu[0]), _qc(t, iv[0])
        inner = ZERO
        for i in iu:
            for k in iv:
                g = ggg_gram(t, i, k, route="lambda")
                if g:
                    inner = inner + g * cu[i] * cv[k].conj()
        lhs = lhs + inner * wu * wv
    group, lam = _group_and_partition(tables[0].block, su)
    signs = SignData.from_block(tables[0].block)
    if (su, au) != (sv, av):
        return lhs, ZERO
    cent = centralizer_order(group, lam)
    rhs = cent.qprime_split()[1] * (signs.eps_G * centralizer_sign(group, lam))
    return lhs, rhs


def _qc(t: GreenTable, i: int) -> LaurentPolynomial:
    """q^c_i, shifted by c_min when the block has half-integral c (as in ytilde_value)."""
    b = t.block
    c = b.pairs[i].c
    if isinstance(c, Fraction) and c.denominator != 1:
        c = c - min(p.c for p in b.pairs)
    return LaurentPolynomial.q(int(c))


def _group_and_partition(b: BlockDescriptor, support: str):
    g = dict(b.group)
    fam = g.get("family")
    if fam not in ("GL", "SL") or "levi" in g:
        raise NotImplementedError(f"centralizer orders are available for GL_n and SL_n, not {b.name}")
    return fam, parse_partition(support)


def allorth_sum(tables, u, v):
    """sum over blocks of <Q_-(u), Z Q_-(v)> over W: equals |C(u)| if u ~ v, else 0."""
    (su, au), (sv, av) = _parse_u(u), _parse_u(v)
    total = ZERO
    for t in tables:
        b = t.block
        iu = [i for i, p in enumerate(b.pairs) if p.support == su]
        iv = [i for i, p in enumerate(b.pairs) if p.support == sv]
        if not iu or not iv:
            continue
        W = b.W
        fu = ClassFunction(W, [sum((t.qtilde[j].values[c] * ytilde_value(t, j, su, au) for j in iu), ZERO)
                               for c in range(W.num_classes)])
        fv = ClassFunction(W, [sum((t.qtilde[j].values[c] * ytilde_value(t, j, sv, av) for j in iv), ZERO)
                               for c in range(W.num_classes)])
        val = _as_poly(inner_product(fu, torus_order(t) * fv))
        cmin = min(p.c for p in b.pairs)
        shift = 2 * cmin if any(isinstance(p.c, Fraction) and p.c.denominator != 1 for p in b.pairs) else 0
        total = total + val.shift(int(shift))
    return total


def allorth_expected(block: BlockDescriptor, u, v):
    (su, au), (sv, av) = _parse_u(u), _parse_u(v)
    if (su, au) != (sv, av):
        return ZERO
    group, lam = _group_and_partition(block, su)
    return centralizer_order(group, lam)
