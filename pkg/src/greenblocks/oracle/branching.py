"""Branching from S_n to Young subgroups by enumeration of permutations.

Characters of S_n are rebuilt from permutation characters on row tabloids
(pi^mu counts the tabloids of shape mu fixed by a permutation) and the
Kostka matrix: pi^mu = sum_lam K_{lam,mu} chi^lam.  Multiplicities are then
inner products summed over every element of the subgroup.

>>> branching_bruteforce(3, (2, 1))[("2 x 1", "2+1")], branching_bruteforce(3, (2, 1))[("1+1 x 1", "2+1")]
(1, 1)
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .kostka import kostka_number

__all__ = ["branching_bruteforce", "sn_characters", "cycle_type"]

MAX_N = 6


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _label(lam):
    return "+".join(map(str, lam))


def cycle_type(perm) -> tuple:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def _fixed_tabloids(rho, mu) -> int:
    """Ways to put each cycle of rho wholly into a row of mu, filling every row exactly."""
    @lru_cache(maxsize=None)
    def rec(i, room):
        if i == len(rho):
            return 1 if not any(room) else 0
        total = 0
        for r in range(len(room)):
            if room[r] >= rho[i]:
                nxt = list(room)
                nxt[r] -= rho[i]
                total += rec(i + 1, tuple(nxt))
        return total
    return rec(0, tuple(mu))


@lru_cache(maxsize=None)
def sn_characters(n: int) -> dict:
    """{lam: {rho: chi^lam(rho)}} from permutation characters and the inverse Kostka matrix."""
    parts = list(_partitions(n))
    pi = {mu: {rho: _fixed_tabloids(rho, mu) for rho in parts} for mu in parts}
    # pi^mu = sum_lam K[lam][mu] chi^lam, with K upper unitriangular in the order of parts
    chi: dict = {}
    # parts run from (n) down and K[lam][mu] != 0 forces lam >= mu, so solve from the top
    for mu in parts:
        vals = dict(pi[mu])
        for lam in parts:
            if lam != mu and lam in chi:
                k = kostka_number(lam, mu)
                if k:
                    for rho in parts:
                        vals[rho] -= k * chi[lam][rho]
        chi[mu] = vals
    return chi


def branching_bruteforce(n: int, composition) -> dict:
    """{(sub label, ambient label): multiplicity of the sub character in Res chi^lam}."""
    if n > MAX_N:
        raise ValueError(f"branching enumeration is limited to n <= {MAX_N}")
    composition = tuple(composition)
    if sum(composition) != n:
        raise ValueError(f"{composition} is not a composition of {n}")
    amb = sn_characters(n)
    subs = [sn_characters(c) for c in composition]
    elements = list(product(*[list(permutations(range(c))) for c in composition]))
    order = len(elements)
    types = []
    for h in elements:
        ts = tuple(cycle_type(x) for x in h)
        whole = tuple(sorted((k for t in ts for k in t), reverse=True))
        types.append((ts, whole))
    out = {}
    for lam, chil in amb.items():
        for alphas in product(*[list(s) for s in subs]):
            acc = 0
            for ts, whole in types:
                v = chil[whole]
                for s, a, t in zip(subs, alphas, ts):
                    v *= s[a][t]
                acc += v
            m = Fraction(acc, order)
            if m.denominator != 1:
                raise AssertionError("non-integral multiplicity")
            out[(" x ".join(_label(a) for a in alphas), _label(lam))] = int(m)
    return out
