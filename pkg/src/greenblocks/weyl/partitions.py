"""Partitions, bipartitions and the combinatorics of rim hooks.

Partitions are weakly decreasing tuples of positive ints.  Bipartitions are
pairs of partitions.

>>> list(partitions(4))
[(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
>>> conjugate((3, 1))
(2, 1, 1)
>>> n_statistic((2, 1))
1
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, gcd
from typing import Iterator

__all__ = [
    "partitions", "bipartitions", "conjugate", "n_statistic", "dominates", "dominance_covers",
    "centralizer_order_sn", "rim_hook_removals", "partition_label", "parse_partition",
    "bipartition_label", "parse_bipartition", "gcd_of_parts", "multiplicities",
]

Partition = tuple


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple:
    return tuple(partitions(n))


def bipartitions(n: int) -> Iterator[tuple]:
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                yield (alpha, beta)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def n_statistic(lam: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(lam))


def multiplicities(lam: Partition) -> dict:
    out: dict = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def gcd_of_parts(lam: Partition) -> int:
    g = 0
    for part in lam:
        g = gcd(g, part)
    return g


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def dominance_covers(parts: list) -> list:
    """Covering pairs (smaller, larger) of dominance order on a list of partitions."""
    less = {(m, l) for l in parts for m in parts if m != l and dominates(l, m)}
    covers = []
    for (m, l) in less:
        if not any((m, k) in less and (k, l) in less for k in parts):
            covers.append((m, l))
    return sorted(covers)


def centralizer_order_sn(rho: Partition) -> int:
    """z_rho = prod_i i^{m_i} m_i!, the centralizer order in S_n."""
    z = 1
    for part, m in multiplicities(rho).items():
        z *= part ** m * factorial(m)
    return z


def _beta(lam: Partition, length: int) -> tuple:
    padded = tuple(lam) + (0,) * (length - len(lam))
    return tuple(padded[i] + length - 1 - i for i in range(length))


def rim_hook_removals(lam: Partition, k: int):
    """Yield (mu, sign) for every rim k-hook removed from lam.

    Uses beta-numbers: a hook corresponds to moving a bead from b to b - k;
    the sign is (-1)^(leg length) = (-1)^(beads strictly between).
    """
    length = len(lam)
    beta = _beta(lam, length)
    bset = set(beta)
    for b in beta:
        t = b - k
        if t < 0 or t in bset:
            continue
        between = sum(1 for x in beta if t < x < b)
        new = sorted((bset - {b}) | {t}, reverse=True)
        mu = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        yield tuple(p for p in mu if p > 0), (-1) ** between


def partition_label(lam: Partition) -> str:
    """'3+1' style label; the empty partition is '-'."""
    return "+".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = tuple(int(p) for p in text.replace(".", "+").split("+"))
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def bipartition_label(bip) -> str:
    """'(2|1.1)' style label."""
    alpha, beta = bip
    fmt = lambda p: ".".join(str(x) for x in p) if p else "-"
    return f"({fmt(alpha)}|{fmt(beta)})"


def parse_bipartition(text: str) -> tuple:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")") and "|" in text):
        raise ValueError(f"not a bipartition label: {text!r}")
    left, right = text[1:-1].split("|")
    return parse_partition(left), parse_partition(right)
