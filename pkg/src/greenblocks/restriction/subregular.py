"""Closed forms for the regular and subregular pairs of a regular block.

For a standard subregular pair sigma (support the subregular class, character
the reflection character) Q~_sigma = q^-1 Id + phi~_sigma; a non-standard one
has Q~_sigma = phi~_sigma.  Restricting to a split Levi M whose components
with a subregular class are M_1, ..., M_k gives

    Res Q~_sigma = sum_i Q~_{sigma_i} + ((1-k) q^-1 + deg phi_sigma - sum_i deg phi_{sigma_i}) Q~_rho,

with sigma_i the standard subregular pair of M_i and rho the regular pair of M.

>>> from greenblocks.restriction import gl_levi_embedding
>>> e = gl_levi_embedding(3, (2, 1))
>>> subregular_restriction(e)
{'1+1 x 1': 1, '2 x 1': 1}
>>> subregular_restriction(gl_levi_embedding(2, (1, 1)))
{'1 x 1': 1 + q^-1}
"""
from __future__ import annotations

from fractions import Fraction

from ..blocks import BlockDescriptor, SubregularRecord, subregular_lookup
from ..exactalg import LaurentPolynomial
from ..lusztig.algorithm import ZERO
from ..weyl import ClassFunction, exterior_reflection_characters
from ..weyl.partitions import partition_label
from .levi import LeviEmbedding, RestrictionData, r_matrix

__all__ = ["subregular_qtilde", "subregular_pair", "subregular_restriction",
           "subregular_restriction_ggg", "pipeline_subregular_row", "gl_subregular_record"]

Qinv = LaurentPolynomial.q(-1)


def gl_subregular_record(n: int) -> SubregularRecord:
    """GL_n shares the subregular data of SL_n, type A_{n-1}."""
    if n < 2:
        raise ValueError("GL_1 has no subregular class")
    return subregular_lookup("A", n - 1)


def subregular_pair(record: SubregularRecord, b: BlockDescriptor, system=None) -> int:
    """Index in b of the pair of the record (standard system unless another is named)."""
    s = record.standard_system if system is None else next(
        x for x in record.systems if x.local_system == system)
    W = b.W
    for i, p in enumerate(b.pairs):
        if p.support == record.class_label and W.char_names[b.phi_index[i]] == s.phi:
            return i
    raise KeyError(f"block {b.name} has no pair ({record.class_label}, {s.phi})")


def subregular_qtilde(record: SubregularRecord, b: BlockDescriptor, system=None) -> ClassFunction:
    """q^-1 Id + phi~_sigma for the standard pair, phi~_sigma otherwise."""
    s = record.standard_system if system is None else next(
        x for x in record.systems if x.local_system == system)
    i = subregular_pair(record, b, system)
    phi = b.W.table[b.phi_index[i]]
    if s.standard:
        return ClassFunction(b.W, [Qinv + v for v in phi])
    return ClassFunction(b.W, [LaurentPolynomial.constant(v) if v else ZERO for v in phi])


def _gl_composition(b: BlockDescriptor) -> tuple:
    g = dict(b.group)
    if g.get("family") != "GL":
        raise NotImplementedError("closed-form subregular restriction is implemented for GL_n Levis")
    return tuple(g.get("levi", (g["n"],)))


def _sub_components(e: LeviEmbedding):
    """(sigma_i ids, their reflection degrees, rho_M id) for the Levi of a GL_n embedding."""
    comp = _gl_composition(e.sub)
    reg = [partition_label((c,)) for c in comp]
    sigmas, degs = [], []
    for i, c in enumerate(comp):
        if c < 2:
            continue
        parts = list(reg)
        parts[i] = partition_label((c - 1, 1))
        sigmas.append(" x ".join(parts))
        degs.append(c - 1)
    return sigmas, degs, " x ".join(reg)


def _standard_sigma(e: LeviEmbedding) -> int:
    n = dict(e.ambient.group)["n"]
    rec = gl_subregular_record(n)
    i = subregular_pair(rec, e.ambient)
    W = e.ambient.W
    refl = exterior_reflection_characters(W)[1]
    if list(W.table[e.ambient.phi_index[i]]) != list(refl.values):
        raise ValueError("subregular pair is not standard")
    return i


def subregular_restriction(e: LeviEmbedding) -> dict:
    """Closed-form coefficients of Res Q~_sigma for the standard subregular pair of GL_n."""
    i = _standard_sigma(e)
    sigmas, degs, rho = _sub_components(e)
    k = len(sigmas)
    deg_sigma = e.ambient.W.degree(e.ambient.phi_index[i])
    coef = Qinv * (1 - k) + (deg_sigma - sum(degs))
    out = {s: LaurentPolynomial.constant(1) for s in sigmas}
    if coef:
        out[rho] = coef
    return dict(sorted(out.items(), key=lambda kv: e.sub.index(kv[0])))


def subregular_restriction_ggg(e: LeviEmbedding) -> dict:
    """Gamma-level closed form: coefficients of eps_G eps_M *R Gamma_sigma on the Gamma_gamma.

    The q-coefficient is the star of the Q~-level one; a-ratios come from the
    descriptors and the zeta-ratio is 1 for regular blocks.
    """
    i = _standard_sigma(e)
    a_sigma = e.ambient.pairs[i].a
    out = {}
    for key, v in subregular_restriction(e).items():
        out[key] = v.star() * _ratio(a_sigma, e.sub.pairs[e.sub.index(key)].a)
    return out


def _ratio(a, b):
    r = Fraction(a, b)
    return r.numerator if r.denominator == 1 else r


def pipeline_subregular_row(e: LeviEmbedding, data: RestrictionData | None = None) -> dict:
    """The row of the general R matrix at the standard subregular pair."""
    data = data or r_matrix(e)
    i = _standard_sigma(e)
    return {e.sub.ids[g]: x for g, x in enumerate(data.R[i]) if x}
