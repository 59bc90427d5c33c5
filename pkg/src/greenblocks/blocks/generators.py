"""Built-in blocks: GL_n principal blocks, their Levi subgroups, and SL_n blocks.

For GL_n the pair of the unipotent class of Jordan type lam carries the
trivial local system and corresponds to the character chi^lam of S_n, with
(n) the trivial character and (1^n) the sign.

For SL_n a block is fixed by a divisor d of n (the order of the central
character); its pairs are the classes lam with every part divisible by d, and
the pair of lam corresponds to chi^{lam/d} of S_{n/d}.

Pairs are listed by increasing class dimension, ties broken by the partition
in increasing lexicographic order; this refines the closure (dominance) order.

>>> [p.id for p in gl_principal_block(3).pairs]
['1+1+1', '2+1', '3']
>>> [p.c for p in gl_principal_block(3).pairs]
[3, 1, 0]
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from itertools import product as iproduct

from ..exactalg import Cyclotomic
from ..weyl import CoxeterDescriptor
from ..weyl.partitions import (conjugate, dominance_covers, dominates, gcd_of_parts, n_statistic,
                               partition_label, partitions)
from .descriptor import BlockDescriptor, PairDescriptor, YTable

__all__ = ["gl_principal_block", "gl_levi_block", "sl_block", "class_dimension_gl",
           "MAX_RANK", "levi_support_map", "sl_all_blocks"]

MAX_RANK = 8


def class_dimension_gl(lam) -> int:
    """dim of the GL_n-class of Jordan type lam: n^2 - sum lam'_j^2."""
    n = sum(lam)
    return n * n - sum(x * x for x in conjugate(lam))


def _check_n(n, bound=MAX_RANK):
    if not isinstance(n, int) or not 1 <= n <= bound:
        raise ValueError(f"rank {n} outside 1..{bound}")


def gl_levi_block(composition) -> BlockDescriptor:
    """Principal block of the Levi GL_{n_1} x ... x GL_{n_r} of GL_n."""
    composition = tuple(int(c) for c in composition)
    if not composition or any(c < 1 for c in composition):
        raise ValueError(f"bad composition {composition}")
    n = sum(composition)
    _check_n(n)
    tuples = list(iproduct(*[list(partitions(c)) for c in composition]))
    label = lambda t: " x ".join(partition_label(p) for p in t)
    dim = lambda t: sum(class_dimension_gl(p) for p in t)
    tuples.sort(key=lambda t: (dim(t), t))
    pairs = tuple(PairDescriptor(id=label(t), support=label(t), phi=label(t),
                                 c=sum(n_statistic(p) for p in t)) for t in tuples)
    less = {(s, t) for s in tuples for t in tuples
            if s != t and all(dominates(b, a) for a, b in zip(s, t))}
    covers = sorted((label(s), label(t)) for (s, t) in less
                    if not any((s, k) in less and (k, t) in less for k in tuples))
    r = len(composition)
    group = (("family", "GL"), ("n", n))
    if r > 1:
        group += (("levi", composition),)
    name = f"GL{n}" if r == 1 else f"GL{n}/L(" + ",".join(map(str, composition)) + ")"
    return BlockDescriptor(
        name=name,
        coxeter=CoxeterDescriptor(tuple(("A", c - 1) for c in composition)),
        pairs=pairs, closure=tuple(covers),
        l=n - r, dim_zl=n, central_rank=r, rank=n, group=group,
        regular_support=label(tuple((c,) for c in composition)),
    )


def gl_principal_block(n: int) -> BlockDescriptor:
    """The unipotent principal block of GL_n: W = S_n, L = maximal torus."""
    _check_n(n)
    return gl_levi_block((n,))


def sl_block(n: int, d: int, y_table: bool = False, twist: int = 1) -> BlockDescriptor:
    """The block of SL_n attached to central characters of order d.

    c = (sum lam'_j^2 - n/d) / 2, which can be a half-integer; differences of
    c inside a block are integers.  With ``y_table=True`` the A(u)-values
    Y(u_a) = zeta_d^a over A(u) = Z/gcd(lam) are attached (split case,
    q = 1 mod n).  The central characters of order d are zeta_d -> zeta_d^twist
    for twist prime to d; they share everything but the Y-table, where
    Y(u_a) = zeta_d^(twist a).
    """
    _check_n(n)
    if not isinstance(d, int) or d < 1 or n % d:
        raise ValueError(f"d = {d} does not divide n = {n}")
    if gcd(twist, d) != 1:
        raise ValueError(f"twist {twist} is not prime to d = {d}")
    m = n // d
    mus = sorted(partitions(m), key=lambda mu: (class_dimension_gl(tuple(d * x for x in mu)), mu))
    lams = [tuple(d * x for x in mu) for mu in mus]
    pairs = []
    for lam, mu in zip(lams, mus):
        c = Fraction(sum(x * x for x in conjugate(lam)) - m, 2)
        c = c.numerator if c.denominator == 1 else c
        pairs.append(PairDescriptor(id=partition_label(lam), support=partition_label(lam),
                                    phi=partition_label(mu), c=c, a=gcd_of_parts(lam)))
    covers = [(partition_label(a), partition_label(b)) for a, b in dominance_covers(lams)]
    yt = None
    if y_table:
        classes, rows = [], []
        for p, lam in zip(pairs, lams):
            g = p.a
            classes.append((p.support, tuple(str(a) for a in range(g)), (1,) * g))
            rows.append((p.id, tuple(Cyclotomic.zeta(d, twist * a % d) for a in range(g))))
        yt = YTable(conductor=d, classes=tuple(classes), rows=tuple(rows))
    return BlockDescriptor(
        name=f"SL{n}/d{d}" + (f"/t{twist % d}" if twist % d > 1 else ""),
        coxeter=CoxeterDescriptor.parse(f"A{m - 1}"),
        pairs=tuple(pairs), closure=tuple(covers),
        l=m - 1, dim_zl=m - 1, central_rank=0, rank=n - 1,
        group=(("family", "SL"), ("n", n), ("d", d)) + ((("twist", twist % d),) if twist % d > 1 else ()),
        regular_support=partition_label((n,)),
        y_table=yt,
    )


def sl_all_blocks(n: int, y_table: bool = True) -> list:
    """Every block of SL_n: one per central character, i.e. per (d, twist)."""
    return [sl_block(n, d, y_table, j) for d in range(1, n + 1) if n % d == 0
            for j in range(1, d + 1) if gcd(j, d) == 1 and (j < d or d == 1)]


def levi_support_map(composition) -> dict:
    """Support of a Levi pair -> support of the GL_n class containing it."""
    out = {}
    for t in iproduct(*[list(partitions(c)) for c in composition]):
        label = " x ".join(partition_label(p) for p in t)
        out[label] = partition_label(tuple(sorted((x for p in t for x in p), reverse=True)))
    return out
