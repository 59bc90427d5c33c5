"""Lusztig restriction transported to Weyl-group data.

For a split Levi M containing L, restriction of class functions from W_G(L)
to W_M(L) commutes with Q^G and Q^M.  Writing ResMat[g][i] = <phi_g, Res phi_i>,
the matrix R with Res Q~_i = sum_g R[i][g] Q~^M_g satisfies

    R P~^M = P~^G transpose(ResMat),

and Lusztig restriction sends Gamma~_i to eps_I(M) sum_g R*[i][g] Gamma~_g.

>>> e = gl_levi_embedding(2, (1, 1))
>>> d = r_matrix(e)
>>> d.R
[[1 + q^-1], [1]]
>>> restrict_ggg(e, "1+1")
{'1 x 1': q + 1}
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..blocks import BlockDescriptor, gl_levi_block, gl_principal_block, levi_support_map
from ..lusztig import GreenTable, factorize, x_to_y
from ..lusztig.algorithm import ZERO
from ..weyl import ClassFunction, SubgroupEmbedding, fusion_restrict, inner_product, young_embedding

__all__ = ["LeviEmbedding", "RestrictionData", "gl_levi_embedding", "explicit_levi_embedding",
           "branching_matrix", "r_matrix", "restrict_green", "restrict_green_via_r", "restrict_theta",
           "restrict_ggg", "sign_restriction_holds"]


@dataclass(eq=False)
class LeviEmbedding:
    """W_M(L) inside W_G(L), with the support map of the blocks and the sign eps_I(M)."""
    ambient: BlockDescriptor
    sub: BlockDescriptor
    embedding: SubgroupEmbedding
    support_map: dict           # sub support -> ambient support containing it
    twist: str = "1"            # class of the twisting element w; identity when split
    eps: int = 1                # eps_I(M) = eps^G(w)
    label: str = ""

    def __post_init__(self):
        if self.embedding.ambient is not self.ambient.W or self.embedding.sub is not self.sub.W:
            raise ValueError("fusion map does not join the Weyl groups of the two blocks")
        for s in self.sub.supports:
            if self.support_map.get(s) not in self.ambient.supports:
                raise ValueError(f"support {s!r} of the Levi block has no ambient image")
        if self.twist != "1" or self.eps != 1:
            raise NotImplementedError("only split embeddings (w = 1) are implemented")

    @cached_property
    def table_g(self) -> GreenTable:
        return factorize(self.ambient)

    @cached_property
    def table_m(self) -> GreenTable:
        return factorize(self.sub)


def gl_levi_embedding(n: int, composition) -> LeviEmbedding:
    """The standard Levi GL_{n_1} x ... x GL_{n_r} of GL_n (principal blocks)."""
    composition = tuple(int(c) for c in composition)
    if sum(composition) != n or any(c < 1 for c in composition):
        raise ValueError(f"{composition} is not a composition of {n}")
    ambient = gl_principal_block(n)
    sub = gl_levi_block(composition) if len(composition) > 1 else ambient
    emb = young_embedding(n, composition)
    if len(composition) == 1:
        emb = SubgroupEmbedding(ambient.W, ambient.W, tuple(range(ambient.W.num_classes)))
    return LeviEmbedding(ambient, sub, emb, levi_support_map(composition),
                         label=f"GL{n} > L(" + ",".join(map(str, composition)) + ")")


def explicit_levi_embedding(ambient: BlockDescriptor, sub: BlockDescriptor, fusion: dict,
                            support_map: dict) -> LeviEmbedding:
    """Embedding for ingested blocks: class fusion and support map given by name."""
    from ..weyl import explicit_embedding
    return LeviEmbedding(ambient, sub, explicit_embedding(sub.W, ambient.W, fusion), dict(support_map))


def branching_matrix(e: LeviEmbedding) -> list:
    """ResMat[g][i] = <phi^M_g, Res phi^G_i> (integers)."""
    WG, WM = e.ambient.W, e.sub.W
    res = [fusion_restrict(ClassFunction(WG, WG.table[j]), e.embedding) for j in e.ambient.phi_index]
    phis_m = [ClassFunction(WM, WM.table[j]) for j in e.sub.phi_index]
    out = []
    for pm in phis_m:
        row = []
        for r in res:
            v = inner_product(pm, r)
            if isinstance(v, Fraction) or v != int(v):
                raise AssertionError("non-integral branching multiplicity")
            row.append(int(v))
        out.append(row)
    return out


@dataclass(eq=False)
class RestrictionData:
    embedding: LeviEmbedding
    resmat: list                # ResMat[g][i]
    R: list                     # R[i][g], Laurent polynomials

    @property
    def R_star(self) -> list:
        return [[x.star() for x in row] for row in self.R]


def r_matrix(e: LeviEmbedding, tG: GreenTable | None = None, tM: GreenTable | None = None,
             check: bool = True) -> RestrictionData:
    """R = P~^G transpose(ResMat) (P~^M)^-1, with the defining identity and vanishing checked."""
    tG = tG or e.table_g
    tM = tM or e.table_m
    res = branching_matrix(e)
    nG, nM = tG.size, tM.size
    # A = P^G ResMat^T  (nG x nM)
    A = [[ZERO] * nM for _ in range(nG)]
    for i in range(nG):
        for g in range(nM):
            acc = ZERO
            for k in range(nG):
                if tG.ptilde[i][k] and res[g][k]:
                    acc = acc + tG.ptilde[i][k] * res[g][k]
            A[i][g] = acc
    R = [[ZERO] * nM for _ in range(nG)]
    for i in range(nG):
        for g in range(nM):
            acc = ZERO
            for h in range(nM):
                if A[i][h] and tM.pinv[h][g]:
                    acc = acc + A[i][h] * tM.pinv[h][g]
            R[i][g] = acc
    data = RestrictionData(e, res, R)
    if check:
        check_r(data, tG, tM)
    return data


def check_r(data: RestrictionData, tG: GreenTable, tM: GreenTable) -> None:
    e, R = data.embedding, data.R
    nG, nM = tG.size, tM.size
    for i in range(nG):
        for g in range(nM):
            lhs = ZERO
            for h in range(nM):
                if R[i][h] and tM.ptilde[h][g]:
                    lhs = lhs + R[i][h] * tM.ptilde[h][g]
            rhs = ZERO
            for k in range(nG):
                if tG.ptilde[i][k] and data.resmat[g][k]:
                    rhs = rhs + tG.ptilde[i][k] * data.resmat[g][k]
            if lhs != rhs:
                raise AssertionError(f"R P^M != P^G ResMat^T at ({i}, {g})")
            if R[i][g]:
                sup_g = e.support_map[e.sub.pairs[g].support]
                if not e.ambient.support_le(sup_g, e.ambient.pairs[i].support):
                    raise AssertionError(f"R[{i}][{g}] = {R[i][g]} outside the vanishing window")


def restrict_theta(data: RestrictionData, y) -> list:
    """Y~^M-coefficients of *R(f) for f with Y~^G-coefficients y, through the R matrix.

    With f = Q^G(theta) and theta = sum_i z_i Q~_i one has x = P~^T z and
    y = P~ x; restriction sends z to R^T z, and the M-side coefficients are
    rebuilt from that.
    """
    e = data.embedding
    tG, tM = e.table_g, e.table_m
    x = _apply(tG.pinv, y)
    # z solves P~^T z = x; P~^T is lower unitriangular
    n = len(x)
    z = [ZERO] * n
    for i in range(n):
        acc = x[i]
        for j in range(i):
            if tG.ptilde[j][i] and z[j]:
                acc = acc - tG.ptilde[j][i] * z[j]
        z[i] = acc
    zm = [sum((data.R[i][g] * z[i] for i in range(n) if data.R[i][g] and z[i]), ZERO)
          for g in range(tM.size)]
    xm = [sum((tM.ptilde[h][g] * zm[h] for h in range(tM.size) if tM.ptilde[h][g] and zm[h]), ZERO)
          for g in range(tM.size)]
    return x_to_y(tM, xm)


def _apply(m, v):
    return [sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in m]


def restrict_green(e: LeviEmbedding, v) -> dict:
    """Coefficients of *R Q_v on the Green functions Q^M_{v'} by counting conjugates.

    The coefficient of Q^M_{v'} is |W_M|^-1 #{x in W_G : x v x^-1 in [v']_M},
    which is |[v']_M| |C_{W_G}(v)| / |W_M| when [v']_M fuses into [v].
    """
    WG, WM = e.ambient.W, e.sub.W
    c = WG.class_index(v)
    out = {}
    for j, target in enumerate(e.embedding.fusion):
        if target == c:
            coef = Fraction(WM.class_sizes[j] * WG.centralizer_order(c), WM.order)
            out[WM.class_names[j]] = coef.numerator if coef.denominator == 1 else coef
    return out


def restrict_green_via_r(data: RestrictionData, v) -> list:
    """Y~^M-coefficients of *R Q_v computed through the R matrix."""
    tG = data.embedding.table_g
    c = tG.block.W.class_index(v)
    return restrict_theta(data, [f.values[c] for f in tG.qtilde])


def restrict_ggg(e: LeviEmbedding, i, data: RestrictionData | None = None) -> dict:
    """Coefficients of *R Gamma~_i on the Gamma~^M_g: eps_I(M) R*[i][g]."""
    data = data or r_matrix(e)
    i = e.ambient.index(i)
    return {e.sub.ids[g]: x.star() * e.eps for g, x in enumerate(data.R[i]) if x}


def sign_restriction_holds(e: LeviEmbedding) -> bool:
    """Res sgn^G = eps_I(M) sgn^M."""
    return fusion_restrict(e.ambient.W.sign(), e.embedding) == e.sub.W.sign() * e.eps
