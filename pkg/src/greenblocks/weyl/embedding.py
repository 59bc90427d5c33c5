"""Subgroup embeddings by class fusion, with restriction and induction.

A ``SubgroupEmbedding`` records, for every class of the subgroup, the class of
the ambient group containing it.  Builders cover Young subgroups of S_n and
standard parabolic subgroups S_{n_1} x ... x S_{n_k} x B_m of B_n (and of
D_n with a D_m factor); anything else is given by an explicit fusion map.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group import ClassFunction, WeylGroupModel, build_group

__all__ = ["SubgroupEmbedding", "young_embedding", "parabolic_embedding",
           "explicit_embedding", "fusion_restrict", "induce"]


@dataclass(frozen=True, eq=False)
class SubgroupEmbedding:
    sub: WeylGroupModel
    ambient: WeylGroupModel
    fusion: tuple  # sub class index -> ambient class index

    def __post_init__(self):
        if len(self.fusion) != self.sub.num_classes:
            raise ValueError("fusion map must cover every subgroup class")
        for i, j in enumerate(self.fusion):
            if j is None or not 0 <= j < self.ambient.num_classes:
                raise ValueError(f"fusion undefined for subgroup class {self.sub.class_names[i]!r}")
        if self.ambient.order % self.sub.order:
            raise ValueError("subgroup order does not divide the group order")
        # every fused class must contain the subgroup part mapped into it
        totals: dict = {}
        for i, j in enumerate(self.fusion):
            totals[j] = totals.get(j, 0) + self.sub.class_sizes[i]
        for j, t in totals.items():
            if t > self.ambient.class_sizes[j]:
                raise ValueError(f"fusion overfills ambient class {self.ambient.class_names[j]!r}")


def young_embedding(n: int, composition) -> SubgroupEmbedding:
    """S_{n_1} x ... x S_{n_r} inside S_n; cycle types concatenate."""
    composition = tuple(int(c) for c in composition)
    if sum(composition) != n or any(c <= 0 for c in composition):
        raise ValueError(f"{composition} is not a composition of {n}")
    ambient = build_group(f"A{n - 1}")
    sub = build_group(" x ".join(f"A{c - 1}" for c in composition))
    fusion = []
    for key in sub.class_keys:
        cycle_type = tuple(sorted((p for part in key for p in part), reverse=True))
        fusion.append(ambient.class_keys.index((cycle_type,)))
    return SubgroupEmbedding(sub, ambient, tuple(fusion))


def parabolic_embedding(family: str, n: int, composition, m: int) -> SubgroupEmbedding:
    """S_{n_1} x ... x S_{n_k} x X_m inside X_n for X = B, C or D.

    Symmetric factors contribute positive cycles to the signed cycle type; a
    split D_n class inherits the tag of the D_m component (pure permutations
    are tagged '+').
    """
    composition = tuple(int(c) for c in composition)
    if sum(composition) + m != n:
        raise ValueError("composition sizes do not add up")
    ambient = build_group(f"{family}{n}")
    names = [f"A{c - 1}" for c in composition]
    if m:
        names.append(f"{family}{m}")
    sub = build_group(" x ".join(names) or "1")
    fusion = []
    for key in sub.class_keys:
        pos = [p for part in key[:len(composition)] for p in part]
        neg, tag = [], ""
        if m:
            last = key[-1]
            pos += list(last[0])
            neg = list(last[1])
            if family == "D":
                tag = last[2]
        pos = tuple(sorted(pos, reverse=True))
        neg = tuple(sorted(neg, reverse=True))
        if family == "D":
            if not neg and all(p % 2 == 0 for p in pos):
                tag = tag or "+"
            else:
                tag = ""
            target = (pos, neg, tag)
        else:
            target = (pos, neg)
        fusion.append(ambient.class_keys.index((target,)))
    return SubgroupEmbedding(sub, ambient, tuple(fusion))


def explicit_embedding(sub: WeylGroupModel, ambient: WeylGroupModel, fusion: dict) -> SubgroupEmbedding:
    """Embedding from a map of class names (subgroup -> ambient)."""
    return SubgroupEmbedding(sub, ambient, tuple(ambient.class_index(fusion[name]) for name in sub.class_names))


def fusion_restrict(f: ClassFunction, e: SubgroupEmbedding) -> ClassFunction:
    if f.group is not e.ambient:
        raise ValueError("class function is not on the ambient group")
    return ClassFunction(e.sub, (f.values[j] for j in e.fusion))


def induce(f: ClassFunction, e: SubgroupEmbedding) -> ClassFunction:
    """Ind f (g) = |C_G(g)|/|H| * sum over H-classes c fused to [g] of |c| f(c)."""
    if f.group is not e.sub:
        raise ValueError("class function is not on the subgroup")
    G, H = e.ambient, e.sub
    acc = [0] * G.num_classes
    for i, j in enumerate(e.fusion):
        if f.values[i]:
            acc[j] = acc[j] + f.values[i] * H.class_sizes[i]
    out = []
    for j, a in enumerate(acc):
        scale = Fraction(G.centralizer_order(j), H.order)
        v = a * scale if a else 0
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        out.append(v)
    return ClassFunction(G, out)
