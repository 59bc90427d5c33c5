"""Irreducible finite Coxeter groups of types A, B/C, D and I2(m), crystallographic.

Each builder returns a ``Factor``: class data, a lazily computed character
table and a reflection matrix for every class representative.

Character conventions
  * A_{n-1} = S_n: rows indexed by partitions, (n) trivial, (1^n) sign,
    values by Murnaghan-Nakayama.
  * B_n: rows indexed by bipartitions (alpha, beta); ((n), -) is trivial and
    (-, (1^n)) is the sign; columns are signed cycle types (positive cycle
    lengths, negative cycle lengths).
  * D_n: restriction from B_n.  For n = 2m the characters {alpha, alpha} split
    into (alpha, alpha, +/-), whose difference on the split class
    (2 gamma, -)^{+/-} is +/- 2^{len gamma} chi^alpha(gamma).  The class tagged
    "+" contains the pure permutations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .partitions import (
    bipartition_label, centralizer_order_sn, multiplicities, partition_label,
    partitions, rim_hook_removals,
)

__all__ = ["Factor", "symmetric_factor", "hyperoctahedral_factor", "type_d_factor",
           "dihedral_factor", "sn_character", "bn_character"]


@dataclass(eq=False)
class Factor:
    name: str
    order: int
    rank: int
    class_keys: tuple
    class_names: tuple
    class_sizes: tuple
    char_keys: tuple
    char_names: tuple
    _table: Callable = field(repr=False)
    _matrix: Callable = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def table(self) -> tuple:
        if "table" not in self._cache:
            self._cache["table"] = self._table()
        return self._cache["table"]

    def matrix(self, i: int) -> tuple:
        key = ("matrix", i)
        if key not in self._cache:
            self._cache[key] = self._matrix(self.class_keys[i])
        return self._cache[key]


# -- type A ---------------------------------------------------------------

@lru_cache(maxsize=None)
def sn_character(lam: tuple, rho: tuple) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule."""
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    return sum(sign * sn_character(mu, rest) for mu, sign in rim_hook_removals(lam, k))


def _perm_matrix_reduced(rho: tuple) -> tuple:
    """Matrix of a permutation of cycle type rho on the span of e_i - e_n."""
    n = sum(rho)
    perm, start = list(range(n)), 0
    for k in rho:
        for i in range(k):
            perm[start + i] = start + (i + 1) % k
        start += k
    # w f_j = e_{w j} - e_{w n} = f_{w j} - f_{w n}, reading f_n as 0
    last = perm[n - 1]
    rows = [[0] * (n - 1) for _ in range(n - 1)]
    for j in range(n - 1):
        img = perm[j]
        if img != n - 1:
            rows[img][j] += 1
        if last != n - 1:
            rows[last][j] -= 1
    return tuple(tuple(r) for r in rows)


def symmetric_factor(n: int) -> Factor:
    """S_n as the Coxeter group A_{n-1}; n = 1 gives the trivial group A0."""
    parts = tuple(partitions(n))
    sizes = tuple(factorial(n) // centralizer_order_sn(p) for p in parts)
    return Factor(
        name=f"A{n - 1}", order=factorial(n), rank=n - 1,
        class_keys=parts, class_names=tuple(partition_label(p) for p in parts),
        class_sizes=sizes, char_keys=parts,
        char_names=tuple(partition_label(p) for p in parts),
        _table=lambda: tuple(tuple(sn_character(lam, rho) for rho in parts) for lam in parts),
        _matrix=_perm_matrix_reduced,
    )


# -- type B ---------------------------------------------------------------

@lru_cache(maxsize=None)
def bn_character(alpha: tuple, beta: tuple, pos: tuple, neg: tuple) -> int:
    """Bipartition Murnaghan-Nakayama recursion for the hyperoctahedral group."""
    if pos:
        k, pos, s = pos[0], pos[1:], 1
    elif neg:
        k, neg, s = neg[0], neg[1:], -1
    else:
        return 1 if not alpha and not beta else 0
    total = 0
    for mu, sign in rim_hook_removals(alpha, k):
        total += sign * bn_character(mu, beta, pos, neg)
    for mu, sign in rim_hook_removals(beta, k):
        total += s * sign * bn_character(alpha, mu, pos, neg)
    return total


def _bn_centralizer(pos: tuple, neg: tuple) -> int:
    z = 1
    for part, m in multiplicities(pos).items():
        z *= (2 * part) ** m * factorial(m)
    for part, m in multiplicities(neg).items():
        z *= (2 * part) ** m * factorial(m)
    return z


def _bipartitions(n):
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield (a, b)


def _signed_perm_matrix(pos: tuple, neg: tuple, flip_first: bool = False) -> tuple:
    n = sum(pos) + sum(neg)
    rows = [[0] * n for _ in range(n)]
    start = 0
    for cycles, s in ((pos, 1), (neg, -1)):
        for k in cycles:
            for i in range(k):
                src, dst = start + i, start + (i + 1) % k
                rows[dst][src] = s if i == k - 1 else 1
            start += k
    if flip_first:
        # conjugate by the sign change of the first coordinate
        for j in range(n):
            rows[0][j] = -rows[0][j]
        for i in range(n):
            rows[i][0] = -rows[i][0]
    return tuple(tuple(r) for r in rows)


def hyperoctahedral_factor(n: int, family: str = "B") -> Factor:
    keys = tuple(_bipartitions(n))
    order = 2 ** n * factorial(n)
    return Factor(
        name=f"{family}{n}", order=order, rank=n,
        class_keys=keys, class_names=tuple(bipartition_label(k) for k in keys),
        class_sizes=tuple(order // _bn_centralizer(*k) for k in keys),
        char_keys=keys, char_names=tuple(bipartition_label(k) for k in keys),
        _table=lambda: tuple(tuple(bn_character(a, b, p, m) for (p, m) in keys) for (a, b) in keys),
        _matrix=lambda key: _signed_perm_matrix(*key),
    )


# -- type D ---------------------------------------------------------------

def _is_split_class(pos, neg) -> bool:
    return not neg and all(p % 2 == 0 for p in pos)


def _d_classes(n):
    out = []
    for pos, neg in _bipartitions(n):
        if len(neg) % 2:
            continue
        if _is_split_class(pos, neg):
            out += [(pos, neg, "+"), (pos, neg, "-")]
        else:
            out.append((pos, neg, ""))
    return out


def _d_chars(n):
    out = []
    for a, b in _bipartitions(n):
        if a == b:
            out += [(a, b, "+"), (a, b, "-")]
        elif (sum(a), a) > (sum(b), b):
            out.append((a, b, ""))
    return out


def _d_value(char, cls) -> Fraction | int:
    a, b, ctag = char
    pos, neg, tag = cls
    value = bn_character(a, b, pos, neg)
    if not ctag:
        return value
    half = Fraction(value, 2)
    if tag:
        gamma = tuple(p // 2 for p in pos)
        delta = 2 ** len(gamma) * sn_character(a, gamma)
        sgn = (1 if ctag == "+" else -1) * (1 if tag == "+" else -1)
        half += Fraction(sgn * delta, 2)
    return half.numerator if half.denominator == 1 else half


def type_d_factor(n: int) -> Factor:
    if n < 2:
        raise ValueError("type D needs rank at least 2")
    keys = tuple(_d_classes(n))
    chars = tuple(_d_chars(n))
    order = 2 ** (n - 1) * factorial(n)
    sizes = []
    for pos, neg, tag in keys:
        size_b = 2 ** n * factorial(n) // _bn_centralizer(pos, neg)
        sizes.append(size_b // 2 if tag else size_b)
    cname = lambda k: bipartition_label(k[:2]) + k[2]
    chname = lambda c: (bipartition_label(c[:2]) + c[2]) if c[2] else "{" + bipartition_label(c[:2])[1:-1] + "}"
    return Factor(
        name=f"D{n}", order=order, rank=n,
        class_keys=keys, class_names=tuple(cname(k) for k in keys),
        class_sizes=tuple(sizes), char_keys=chars, char_names=tuple(chname(c) for c in chars),
        _table=lambda: tuple(tuple(_d_value(c, k) for k in keys) for c in chars),
        _matrix=lambda key: _signed_perm_matrix(key[0], key[1], flip_first=(key[2] == "-")),
    )


# -- dihedral -------------------------------------------------------------

_CARTAN = {2: (0, 0), 3: (1, 1), 4: (2, 1), 6: (3, 1)}
_TWO_COS = {Fraction(0): 2, Fraction(1, 6): 1, Fraction(1, 4): 0, Fraction(1, 3): -1,
            Fraction(1, 2): -2, Fraction(2, 3): -1, Fraction(3, 4): 0, Fraction(5, 6): 1}


def _two_cos(t: Fraction) -> int:
    """2 cos(2 pi t) for t with denominator dividing 4 or 6."""
    return _TWO_COS[t - (t.numerator // t.denominator)]


def _mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def dihedral_factor(m: int) -> Factor:
    """I2(m) for crystallographic m in {2, 3, 4, 6}, acting on its root lattice."""
    if m not in _CARTAN:
        raise ValueError(f"I2({m}) is not crystallographic; only m in 2, 3, 4, 6 are supported")
    a, b = _CARTAN[m]
    s = ((-1, a), (0, 1))
    t = ((1, 0), (b, -1))
    r = _mat_mul(s, t)
    keys = [("1", 0)] + [("r", k) for k in range(1, m // 2 + 1)]
    if m % 2 == 0:
        keys += [("s", 0), ("t", 0)]
    else:
        keys += [("s", 0)]
    keys = tuple(keys)

    def size(key):
        kind, k = key
        if kind == "1":
            return 1
        if kind == "r":
            return 1 if 2 * k == m else 2
        return m // 2 if m % 2 == 0 else m

    def matrix(key):
        kind, k = key
        if kind == "s":
            return s
        if kind == "t":
            return t
        out = ((1, 0), (0, 1))
        for _ in range(k):
            out = _mat_mul(out, r)
        return out

    linear = [("1", 1, 1), ("sgn", -1, -1)]
    if m % 2 == 0:
        linear += [("eps_s", -1, 1), ("eps_t", 1, -1)]
    chars = tuple([c[0] for c in linear] + [f"rho{j}" for j in range(1, (m - 1) // 2 + 1)])

    def table():
        rows = []
        for _, vs, vt in linear:
            row = []
            for kind, k in keys:
                row.append(1 if kind == "1" else (vs * vt) ** k if kind == "r" else vs if kind == "s" else vt)
            rows.append(tuple(row))
        for j in range(1, (m - 1) // 2 + 1):
            rows.append(tuple(2 if kind == "1" else _two_cos(Fraction(j * k, m)) if kind == "r" else 0
                              for kind, k in keys))
        return tuple(rows)

    names = tuple("1" if kind == "1" else f"r{k}" if kind == "r" and k > 1 else kind
                  for kind, k in keys)
    return Factor(
        name=f"I2({m})", order=2 * m, rank=2,
        class_keys=keys, class_names=names, class_sizes=tuple(size(k) for k in keys),
        char_keys=chars, char_names=chars, _table=table, _matrix=matrix,
    )
