"""Weyl groups as products of irreducible factors, with class-function calculus.

>>> W = build_group("A2")
>>> W.class_names, W.class_sizes
(('3', '2+1', '1+1+1'), (2, 3, 1))
>>> W.table
((1, 1, 1), (-1, 0, 2), (1, -1, 1))
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from math import prod

from ..exactalg import LaurentPolynomial, Q, RationalFunction, conj
from .factors import Factor, dihedral_factor, hyperoctahedral_factor, symmetric_factor, type_d_factor

__all__ = [
    "CoxeterDescriptor", "WeylGroupModel", "ClassFunction", "build_group",
    "exterior_reflection_characters", "torus_order_function", "inner_product",
    "characteristic_polynomial", "UnsupportedRank",
]

RANK_BOUND = {"A": 9, "B": 8, "C": 8, "D": 8}


class UnsupportedRank(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterDescriptor:
    """Irreducible factors as (family, n); for I2 the n is the dihedral order m.

    Text form: factors joined by ' x ', e.g. ``"A2 x A0"``, ``"B3"``,
    ``"I2(6)"`` (``"G2"`` is accepted as an alias); ``"1"`` is the trivial group.
    """
    factors: tuple

    @classmethod
    def parse(cls, text: str) -> "CoxeterDescriptor":
        text = text.strip()
        if text in ("", "1"):
            return cls(())
        out = []
        for part in re.split(r"\s*x\s*", text):
            if part == "G2":
                out.append(("I2", 6))
                continue
            m = re.fullmatch(r"I2\((\d+)\)", part)
            if m:
                out.append(("I2", int(m.group(1))))
                continue
            m = re.fullmatch(r"([ABCD])(\d+)", part)
            if not m:
                raise ValueError(f"cannot parse Coxeter factor {part!r}")
            out.append((m.group(1), int(m.group(2))))
        return cls(tuple(out))

    def __str__(self):
        if not self.factors:
            return "1"
        return " x ".join(f"I2({n})" if fam == "I2" else f"{fam}{n}" for fam, n in self.factors)

    def validate(self):
        for fam, n in self.factors:
            if fam in RANK_BOUND:
                low = 0 if fam == "A" else (2 if fam == "D" else 1)
                if not low <= n <= RANK_BOUND[fam]:
                    raise UnsupportedRank(f"{fam}{n} outside the supported ranks {low}..{RANK_BOUND[fam]}")
            elif fam == "I2":
                if n not in (2, 3, 4, 6):
                    raise UnsupportedRank(f"I2({n}) is not crystallographic")
            else:
                raise UnsupportedRank(f"unknown family {fam}")


def _build_factor(fam: str, n: int) -> Factor:
    if fam == "A":
        return symmetric_factor(n + 1)
    if fam in ("B", "C"):
        return hyperoctahedral_factor(n, fam)
    if fam == "D":
        return type_d_factor(n)
    return dihedral_factor(n)


def characteristic_polynomial(matrix) -> LaurentPolynomial:
    """det(qI - M) by the Faddeev-LeVerrier recursion (exact over Q)."""
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.constant(1)
    integral = all(type(x) is int for row in matrix for x in row)
    a = [list(row) if integral else [Fraction(x) for x in row] for row in matrix]
    cols = [list(c) for c in zip(*a)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        mk_cols = [list(c) for c in zip(*mk)]
        mk = [[sum(x * y for x, y in zip(row, col) if x) for col in mk_cols] for row in a]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        trace = sum(sum(x * y for x, y in zip(cols[i], mk[i]) if x) for i in range(n))
        if integral:
            c, r = divmod(-trace, k)
            assert r == 0
            coeffs[n - k] = c
        else:
            coeffs[n - k] = Fraction(-trace, 1) / k
    return LaurentPolynomial(coeffs, 0)


class WeylGroupModel:
    """A finite Coxeter group given as a product of irreducible factors.

    Classes and characters of a product are tuples over the factors; their
    text names are joined with ' x '.  Reflection matrices are block diagonal.
    """

    def __init__(self, descriptor: CoxeterDescriptor):
        descriptor.validate()
        self.descriptor = descriptor
        self.factors = tuple(_build_factor(f, n) for f, n in descriptor.factors)
        fs = self.factors
        self.order = prod(f.order for f in fs)
        self.rank = sum(f.rank for f in fs)
        index_tuples = list(iproduct(*[range(len(f.class_keys)) for f in fs]))
        self._class_index_tuples = tuple(index_tuples)
        self.class_keys = tuple(tuple(f.class_keys[i] for f, i in zip(fs, t)) for t in index_tuples)
        self.class_names = tuple(" x ".join(f.class_names[i] for f, i in zip(fs, t)) or "1"
                                 for t in index_tuples)
        self.class_sizes = tuple(prod(f.class_sizes[i] for f, i in zip(fs, t)) for t in index_tuples)
        char_tuples = list(iproduct(*[range(len(f.char_keys)) for f in fs]))
        self._char_index_tuples = tuple(char_tuples)
        self.char_keys = tuple(tuple(f.char_keys[i] for f, i in zip(fs, t)) for t in char_tuples)
        self.char_names = tuple(" x ".join(f.char_names[i] for f, i in zip(fs, t)) or "1"
                                for t in char_tuples)
        self._class_lookup = {name: i for i, name in enumerate(self.class_names)}
        self._char_lookup = {name: i for i, name in enumerate(self.char_names)}

    def __repr__(self):
        return f"WeylGroupModel({self.descriptor})"

    @property
    def num_classes(self) -> int:
        return len(self.class_keys)

    def centralizer_order(self, i: int) -> int:
        return self.order // self.class_sizes[i]

    def class_index(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self._class_lookup[name]
        except KeyError:
            raise KeyError(f"no class {name!r} in {self.descriptor}") from None

    def char_index(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self._char_lookup[name]
        except KeyError:
            raise KeyError(f"no character {name!r} in {self.descriptor}") from None

    @cached_property
    def table(self) -> tuple:
        tables = [f.table for f in self.factors]
        rows = []
        for ct in self._char_index_tuples:
            rows.append(tuple(prod(tab[c][k] for tab, c, k in zip(tables, ct, kt))
                              for kt in self._class_index_tuples))
        return tuple(rows)

    def character(self, j) -> "ClassFunction":
        return ClassFunction(self, self.table[self.char_index(j)])

    def degree(self, j) -> int:
        return self.table[self.char_index(j)][self.identity_class]

    @cached_property
    def identity_class(self) -> int:
        return max(range(self.num_classes), key=lambda i: (self.class_sizes[i] == 1, self.trace(i)))

    def matrix(self, i: int) -> tuple:
        """Reflection-representation matrix of the representative of class i."""
        blocks = [f.matrix(k) for f, k in zip(self.factors, self._class_index_tuples[i])]
        out = [[0] * self.rank for _ in range(self.rank)]
        off = 0
        for b in blocks:
            for r, row in enumerate(b):
                for c, x in enumerate(row):
                    out[off + r][off + c] = x
            off += len(b)
        return tuple(tuple(r) for r in out)

    def trace(self, i: int):
        m = self.matrix(i)
        return sum(m[k][k] for k in range(len(m)))

    @cached_property
    def charpolys(self) -> tuple:
        """det(qI - M(w)) per class, as products over the factors."""
        cache = {}
        out = []
        for t in self._class_index_tuples:
            poly = LaurentPolynomial.constant(1)
            for fi, (f, k) in enumerate(zip(self.factors, t)):
                key = (fi, k)
                if key not in cache:
                    cache[key] = characteristic_polynomial(f.matrix(k))
                poly = poly * cache[key]
            out.append(poly)
        return tuple(out)

    def trivial(self) -> "ClassFunction":
        return ClassFunction(self, (1,) * self.num_classes)

    def sign(self) -> "ClassFunction":
        """w -> det M(w) (= (-1)^{length})."""
        return ClassFunction(self, tuple((-1) ** self.rank * p.evaluate(0) for p in self.charpolys))

    def char_index_of(self, f: "ClassFunction") -> int:
        for j, row in enumerate(self.table):
            if row == f.values:
                return j
        raise ValueError("class function is not an irreducible character")


_GROUP_CACHE: dict = {}


def build_group(d) -> WeylGroupModel:
    """Build (and memoize) the model for a descriptor or its text form."""
    if isinstance(d, str):
        d = CoxeterDescriptor.parse(d)
    if d not in _GROUP_CACHE:
        _GROUP_CACHE[d] = WeylGroupModel(d)
    return _GROUP_CACHE[d]


class ClassFunction:
    """A class function on a WeylGroupModel, one value per class.

    Values may be exact scalars, Laurent polynomials or rational functions.
    """
    __slots__ = ("group", "values")

    def __init__(self, group: WeylGroupModel, values):
        values = tuple(values)
        if len(values) != group.num_classes:
            raise ValueError("class function has the wrong number of values")
        self.group = group
        self.values = values

    def _check(self, other):
        if not isinstance(other, ClassFunction):
            return None
        if other.group is not self.group:
            raise ValueError("class functions live on different groups")
        return other

    def __add__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return ClassFunction(self.group, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return ClassFunction(self.group, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.group, (-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, (a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, (a * other for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash(self.values)

    def map(self, f) -> "ClassFunction":
        return ClassFunction(self.group, (f(a) for a in self.values))

    def star(self) -> "ClassFunction":
        return self.map(lambda a: a.star() if hasattr(a, "star") else a)

    def conj(self) -> "ClassFunction":
        return self.map(lambda a: a.conj() if hasattr(a, "conj") else conj(a))

    def __call__(self, cls):
        return self.values[self.group.class_index(cls)]

    def __repr__(self):
        return f"ClassFunction({dict(zip(self.group.class_names, self.values))})"


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def inner_product(f: ClassFunction, g: ClassFunction):
    """|W|^-1 sum_w f(w) conj(g(w)), summed over classes with their sizes."""
    if f.group is not g.group:
        raise ValueError("inner product of class functions on different groups")
    W = f.group
    acc = 0
    for size, a, b in zip(W.class_sizes, f.values, g.values):
        if not a or not b:
            continue
        b = b.conj() if hasattr(b, "conj") else conj(b)
        acc = acc + (a * b) * size
    if isinstance(acc, RationalFunction):
        return acc * Fraction(1, W.order)
    if isinstance(acc, LaurentPolynomial):
        return acc / W.order
    return _normalize(Fraction(acc) / W.order) if not hasattr(acc, "conductor") else acc / W.order


def exterior_reflection_characters(W: WeylGroupModel) -> list:
    """Traces of the exterior powers of the reflection representation.

    Entry i at class w is (-1)^i times the coefficient of t^{l-i} in det(tI - M(w)).
    """
    l = W.rank
    out = []
    for i in range(l + 1):
        out.append(ClassFunction(W, ((-1) ** i * p[l - i] for p in W.charpolys)))
    return out


def torus_order_function(W: WeylGroupModel, ambient_rank: int) -> ClassFunction:
    """Z(w) = (q-1)^{ambient_rank - l} det(qI - M(w))."""
    if ambient_rank < W.rank:
        raise ValueError("ambient rank below the reflection rank")
    factor = (Q - 1) ** (ambient_rank - W.rank)
    return ClassFunction(W, (factor * p for p in W.charpolys))
