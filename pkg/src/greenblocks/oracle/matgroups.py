"""GL_n(F_p) and SL_n(F_p) by brute force, n <= 3, through numpy arrays of matrices.

All q^(n^2) matrices are enumerated once; the determinant and the Jordan type
of unipotents are computed without reference to the symbolic layer.  For
n <= 3 the Jordan type of a unipotent y is fixed by the nilpotency index of
y - 1.

>>> g = FiniteMatrixGroup("GL", 2, 2)
>>> g.order
6
>>> [(c.jordan, c.centralizer) for c in enumerate_unipotent(g)]
[('1+1', 6), ('2', 2)]
>>> [(c.jordan, c.classes, c.centralizer) for c in enumerate_unipotent(FiniteMatrixGroup("SL", 2, 5))]
[('1+1', 1, 120), ('2', 2, 10)]
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cache import cached

__all__ = ["FiniteMatrixGroup", "UnipotentClassData", "enumerate_unipotent", "SizeBoundExceeded",
           "jordan_types", "MAX_ENUMERATION"]

MAX_ENUMERATION = 5 ** 9   # all 3x3 matrices over F_5


class SizeBoundExceeded(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def _all_matrices(n: int, p: int) -> np.ndarray:
    total = p ** (n * n)
    if total > MAX_ENUMERATION:
        raise SizeBoundExceeded(f"{p}^{n * n} matrices exceed the enumeration bound")
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, n * n), dtype=np.int8)
    for k in range(n * n):
        out[:, k] = idx % p
        idx //= p
    return out.reshape(total, n, n)


def _det(a: np.ndarray, p: int) -> np.ndarray:
    a = a.astype(np.int64)
    n = a.shape[1]
    if n == 1:
        d = a[:, 0, 0]
    elif n == 2:
        d = a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]
    elif n == 3:
        d = (a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
             - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
             + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0]))
    else:
        raise SizeBoundExceeded("matrix oracle is limited to n <= 3")
    return d % p


def _matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.einsum("nij,njk->nik", a.astype(np.int32), b.astype(np.int32)) % p).astype(np.int8)


def jordan_types(y: np.ndarray, p: int) -> list:
    """Jordan-type labels of a stack of unipotent n x n matrices, n <= 3."""
    n = y.shape[1]
    nil = (y.astype(np.int32) - np.eye(n, dtype=np.int32)) % p
    index = np.zeros(len(y), dtype=np.int32)
    power = nil.astype(np.int8)
    alive = np.ones(len(y), dtype=bool)
    for k in range(1, n + 1):
        zero = ~power.reshape(len(y), -1).any(axis=1)
        newly = alive & zero
        index[newly] = k
        alive &= ~zero
        power = _matmul(power, nil, p)
    if alive.any():
        raise ValueError("matrix is not unipotent")
    labels = {1: {1: "1"}, 2: {1: "1+1", 2: "2"}, 3: {1: "1+1+1", 2: "2+1", 3: "3"}}[n]
    return [labels[int(k)] for k in index]


def _jordan_rep(label: str, n: int) -> np.ndarray:
    parts = [int(x) for x in label.split("+")]
    m = np.eye(n, dtype=np.int8)
    pos = 0
    for k in parts:
        for i in range(k - 1):
            m[pos + i, pos + i + 1] = 1
        pos += k
    return m


@dataclass(frozen=True)
class UnipotentClassData:
    jordan: str         # Jordan type, parts joined by '+'
    classes: int        # number of G-classes of this type
    centralizer: int    # |C_G(u)|, the same for each of them
    total: int          # number of unipotents of this type


@dataclass(frozen=True)
class FiniteMatrixGroup:
    kind: str     # "GL" or "SL"
    n: int
    q: int

    def __post_init__(self):
        if self.kind not in ("GL", "SL"):
            raise ValueError(f"unsupported group {self.kind}")
        if not 1 <= self.n <= 3:
            raise SizeBoundExceeded("matrix oracle is limited to n <= 3")
        if not _is_prime(self.q):
            raise ValueError("only prime fields are enumerated")
        if self.q ** (self.n * self.n) > MAX_ENUMERATION:
            raise SizeBoundExceeded(f"{self.kind}{self.n}(F_{self.q}) exceeds the enumeration bound")

    @cached_property
    def elements(self) -> np.ndarray:
        mats = _all_matrices(self.n, self.q)
        d = _det(mats, self.q)
        keep = d != 0 if self.kind == "GL" else d == 1
        return mats[keep]

    @property
    def order(self) -> int:
        return int(self._data()["order"])

    def centralizer_of(self, x: np.ndarray) -> int:
        g = self.elements
        xs = np.broadcast_to(x, g.shape)
        return int((_matmul(g, xs, self.q) == _matmul(xs, g, self.q)).reshape(len(g), -1).all(axis=1).sum())

    def _compute(self) -> dict:
        g = self.elements
        n, p = self.n, self.q
        nil = (g.astype(np.int32) - np.eye(n, dtype=np.int32)) % p
        power = nil.astype(np.int8)
        for _ in range(n - 1):
            power = _matmul(power, nil, p)
        unip = g[~power.reshape(len(g), -1).any(axis=1)]
        types = jordan_types(unip, p)
        counts: dict = {}
        for t in types:
            counts[t] = counts.get(t, 0) + 1
        order = len(g)
        out = []
        for label in sorted(counts, key=lambda s: (-s.count("+"), s)):
            cent = self.centralizer_of(_jordan_rep(label, n))
            k, r = divmod(counts[label] * cent, order)
            if r:
                raise AssertionError("class sizes do not divide evenly")
            out.append({"jordan": label, "classes": k, "centralizer": cent, "total": counts[label]})
        return {"order": order, "classes": out}

    def _data(self) -> dict:
        return cached("unipotent-classes", {"kind": self.kind, "n": self.n, "q": self.q}, self._compute)


def enumerate_unipotent(g: FiniteMatrixGroup) -> list:
    """Unipotent classes by Jordan type with their exact centralizer orders."""
    return [UnipotentClassData(**c) for c in g._data()["classes"]]
