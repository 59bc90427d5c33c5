"""Kostka-Foulkes polynomials through the charge statistic.

K_{lam,mu}(t) is the sum of t^charge over semistandard tableaux of shape lam
and content mu, the charge being read off the row reading word (bottom row
first) by the Lascoux-Schutzenberger standard-subword decomposition.

>>> kostka_foulkes((2,), (1, 1))
{1: 1}
>>> kostka_foulkes((2, 1), (1, 1, 1))
{1: 1, 2: 1}
>>> kostka_foulkes((1, 1), (2,))
{}
"""
from __future__ import annotations

__all__ = ["kostka_foulkes", "ssyt", "charge", "kostka_number"]


def _strips(outer_prev, k, maxlen):
    """Shapes nu containing outer_prev with nu / outer_prev a horizontal strip of size k."""
    prev = list(outer_prev) + [0]
    out = []

    def rec(i, left, acc):
        if i == len(prev):
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        hi = prev[i - 1] if i > 0 else prev[0] + left
        for add in range(min(left, hi - prev[i]) + 1):
            rec(i + 1, left - add, acc + [prev[i] + add])

    rec(0, k, [])
    return [nu for nu in out if len(nu) <= maxlen]


def ssyt(shape, content):
    """Semistandard tableaux as chains of shapes, returned as row lists."""
    shape = tuple(x for x in shape if x)
    results = []

    def rec(letter, cur, chain):
        if letter > len(content):
            if cur == shape:
                results.append(chain)
            return
        for nu in _strips(cur, content[letter - 1], len(shape)):
            if all(i < len(shape) and x <= shape[i] for i, x in enumerate(nu)):
                rec(letter + 1, nu, chain + [nu])

    rec(1, (), [])
    tableaux = []
    for chain in results:
        rows = [[] for _ in shape]
        prev = ()
        for letter, nu in enumerate(chain, start=1):
            for i, x in enumerate(nu):
                before = prev[i] if i < len(prev) else 0
                rows[i].extend([letter] * (x - before))
            prev = nu
        tableaux.append(rows)
    return tableaux


def charge(word) -> int:
    w = list(word)
    total = 0
    while w:
        top = max(w)
        chosen = []
        pos = len(w)
        index = 0
        for letter in range(1, top + 1):
            # scan leftwards from pos, wrapping to the right end once
            found = None
            for i in range(pos - 1, -1, -1):
                if w[i] == letter and i not in chosen:
                    found = i
                    break
            if found is None:
                for i in range(len(w) - 1, pos - 1, -1):
                    if w[i] == letter and i not in chosen:
                        found = i
                        break
                if found is None:
                    break
                if letter > 1:
                    index += 1
            total += index
            chosen.append(found)
            pos = found
        w = [x for i, x in enumerate(w) if i not in chosen]
    return total


def kostka_foulkes(lam, mu) -> dict:
    """{exponent: coefficient} of K_{lam,mu}(t)."""
    out: dict = {}
    for rows in ssyt(tuple(lam), tuple(mu)):
        word = [x for row in reversed(rows) for x in row]
        c = charge(word)
        out[c] = out.get(c, 0) + 1
    return dict(sorted(out.items()))


def kostka_number(lam, mu) -> int:
    return len(ssyt(tuple(lam), tuple(mu)))
