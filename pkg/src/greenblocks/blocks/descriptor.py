"""Block descriptors: the indexing data on which the factorization runs.

A block lists its pairs (support class plus local system) in a total order
refining the closure order of the supports, each with the Weyl-group
character it corresponds to, the normalization exponent c and a = |A(u)|.
Descriptors validate themselves on construction and serialize to JSON.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..exactalg import conj, scalar_from_json, scalar_to_json
from ..weyl import CoxeterDescriptor, WeylGroupModel, build_group

__all__ = ["PairDescriptor", "BlockDescriptor", "YTable", "BlockValidationError",
           "load_block", "dump_block", "SCHEMA"]

SCHEMA = "greenblocks.block/1"


class BlockValidationError(ValueError):
    """Invariant violation; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _exact(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class PairDescriptor:
    id: str
    support: str
    phi: str           # name of the Weyl-group character
    c: object          # int or Fraction (half-integers occur for SL_n)
    a: int = 1
    eps: int = 1       # the sign of the preferred extension; +1 for split groups


@dataclass(frozen=True)
class YTable:
    """Values Y_iota(u_a) on the F-classes a of A(u), per support class.

    ``classes[support]`` is (class labels, class sizes); ``rows[pair id]`` is
    the tuple of values in the same order.  Entries may be cyclotomic of the
    given conductor.
    """
    conductor: int
    classes: tuple  # ((support, labels tuple, sizes tuple), ...)
    rows: tuple     # ((pair id, values tuple), ...)

    def classes_of(self, support):
        for s, labels, sizes in self.classes:
            if s == support:
                return labels, sizes
        raise KeyError(support)

    def row(self, pair_id):
        for pid, values in self.rows:
            if pid == pair_id:
                return values
        raise KeyError(pair_id)


@dataclass(frozen=True)
class BlockDescriptor:
    name: str
    coxeter: CoxeterDescriptor
    pairs: tuple                  # PairDescriptors in the chosen total order
    closure: tuple                # covering relations (smaller support, larger support)
    l: int
    dim_zl: int
    central_rank: int
    rank: int | None = None       # F_q-rank of G, for signs
    group: tuple = ()             # e.g. (("family", "GL"), ("n", 3))
    regular_support: str | None = None
    y_table: YTable | None = None

    def __post_init__(self):
        validate_block(self)

    # -- derived structure ------------------------------------------------
    @cached_property
    def W(self) -> WeylGroupModel:
        return build_group(self.coxeter)

    @property
    def size(self) -> int:
        return len(self.pairs)

    @cached_property
    def ids(self) -> tuple:
        return tuple(p.id for p in self.pairs)

    def index(self, pair_id) -> int:
        if isinstance(pair_id, int):
            return pair_id
        try:
            return self.ids.index(pair_id)
        except ValueError:
            raise KeyError(f"no pair {pair_id!r} in block {self.name}") from None

    @cached_property
    def supports(self) -> tuple:
        out = []
        for p in self.pairs:
            if p.support not in out:
                out.append(p.support)
        return tuple(out)

    @cached_property
    def groups(self) -> tuple:
        """Index ranges of equal-support pairs, in order."""
        out, start = [], 0
        for i in range(1, len(self.pairs) + 1):
            if i == len(self.pairs) or self.pairs[i].support != self.pairs[start].support:
                out.append(tuple(range(start, i)))
                start = i
        return tuple(out)

    @cached_property
    def phi_index(self) -> tuple:
        """Row of the Weyl-group character table for each pair."""
        return tuple(self.W.char_index(p.phi) for p in self.pairs)

    @cached_property
    def _strictly_below(self) -> dict:
        below = {s: set() for s in self.supports}
        for lo, hi in self.closure:
            below[hi].add(lo)
        changed = True
        while changed:
            changed = False
            for s in below:
                new = set().union(*(below[t] for t in below[s])) if below[s] else set()
                if not new <= below[s]:
                    below[s] |= new
                    changed = True
        return below

    def support_le(self, s: str, t: str) -> bool:
        """Closure order: C_s contained in the closure of C_t."""
        return s == t or s in self._strictly_below[t]

    @cached_property
    def hat(self) -> tuple:
        """Index of the duality partner: the pair whose character is phi x sign."""
        W = self.W
        sign = W.sign().values
        rows = {W.table[j]: j for j in range(len(W.table))}
        pos = {j: i for i, j in enumerate(self.phi_index)}
        out = []
        for j in self.phi_index:
            twisted = tuple(x * s for x, s in zip(W.table[j], sign))
            out.append(pos[rows[twisted]])
        return tuple(out)

    def group_info(self) -> dict:
        return dict(self.group)

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "name": self.name,
            "coxeter": str(self.coxeter),
            "pairs": [{"id": p.id, "support": p.support, "phi": p.phi,
                       "c": scalar_to_json(p.c), "a": p.a} for p in self.pairs],
            "closure_order": [list(r) for r in self.closure],
            "total_order": list(self.ids),
            "dims": {"l": self.l, "dimZL": self.dim_zl, "central_rank": self.central_rank},
        }
        if any(p.eps != 1 for p in self.pairs):
            for d, p in zip(out["pairs"], self.pairs):
                d["eps"] = p.eps
        if self.rank is not None:
            out["dims"]["rank"] = self.rank
        if self.group:
            out["group"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.group}
        if self.regular_support is not None:
            out["regular_support"] = self.regular_support
        if self.y_table is not None:
            yt = self.y_table
            out["y_table"] = {
                "conductor": yt.conductor,
                "classes": [{"support": s, "labels": list(lab), "sizes": list(sz)}
                            for s, lab, sz in yt.classes],
                "rows": {pid: [scalar_to_json(v) for v in vals] for pid, vals in yt.rows},
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BlockDescriptor":
        try:
            return _from_json(data)
        except BlockValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise BlockValidationError("<document>", f"malformed descriptor ({exc!r})") from exc


def _from_json(data: dict) -> BlockDescriptor:
    if data.get("schema", SCHEMA) != SCHEMA:
        raise BlockValidationError("schema", f"unsupported schema {data.get('schema')!r}")
    pairs = {}
    for k, p in enumerate(data["pairs"]):
        pd = PairDescriptor(id=str(p["id"]), support=str(p["support"]), phi=str(p["phi"]),
                            c=_exact(scalar_from_json(p["c"])), a=int(p.get("a", 1)),
                            eps=int(p.get("eps", 1)))
        if pd.id in pairs:
            raise BlockValidationError(f"pairs[{k}].id", f"duplicate pair id {pd.id!r}")
        pairs[pd.id] = pd
    order = data.get("total_order", list(pairs))
    if sorted(order) != sorted(pairs):
        raise BlockValidationError("total_order", "must list every pair id exactly once")
    dims = data["dims"]
    group = data.get("group", {})
    yt = None
    if "y_table" in data:
        y = data["y_table"]
        yt = YTable(
            conductor=int(y.get("conductor", 1)),
            classes=tuple((c["support"], tuple(c["labels"]), tuple(int(s) for s in c["sizes"]))
                          for c in y["classes"]),
            rows=tuple((pid, tuple(scalar_from_json(v) for v in vals)) for pid, vals in y["rows"].items()),
        )
    return BlockDescriptor(
        name=str(data.get("name", "block")),
        coxeter=CoxeterDescriptor.parse(data["coxeter"]),
        pairs=tuple(pairs[i] for i in order),
        closure=tuple(tuple(r) for r in data.get("closure_order", [])),
        l=int(dims["l"]), dim_zl=int(dims["dimZL"]), central_rank=int(dims["central_rank"]),
        rank=dims.get("rank"),
        group=tuple((k, tuple(v) if isinstance(v, list) else v) for k, v in group.items()),
        regular_support=data.get("regular_support"),
        y_table=yt,
    )


def validate_block(b: BlockDescriptor) -> None:
    try:
        W = build_group(b.coxeter)
    except ValueError as exc:
        raise BlockValidationError("coxeter", str(exc)) from exc
    ids = [p.id for p in b.pairs]
    if len(set(ids)) != len(ids):
        raise BlockValidationError("pairs", "duplicate pair ids")
    phis = [p.phi for p in b.pairs]
    for k, p in enumerate(b.pairs):
        if p.phi not in W.char_names:
            raise BlockValidationError(f"pairs[{k}].phi", f"{p.phi!r} is not a character of {b.coxeter}")
        if not isinstance(p.a, int) or p.a < 1:
            raise BlockValidationError(f"pairs[{k}].a", "a must be a positive integer")
        if p.eps not in (1, -1):
            raise BlockValidationError(f"pairs[{k}].eps", "eps must be +1 or -1")
    if sorted(phis) != sorted(W.char_names):
        raise BlockValidationError("pairs", "characters are not a bijection onto Irr(W)")
    # equal supports contiguous
    seen, prev = set(), None
    for k, p in enumerate(b.pairs):
        if p.support != prev and p.support in seen:
            raise BlockValidationError(f"total_order[{k}]", f"pairs on support {p.support!r} are not contiguous")
        seen.add(p.support)
        prev = p.support
    supports = list(dict.fromkeys(p.support for p in b.pairs))
    for k, rel in enumerate(b.closure):
        if len(rel) != 2 or rel[0] not in supports or rel[1] not in supports:
            raise BlockValidationError(f"closure_order[{k}]", f"unknown supports in {rel!r}")
    # acyclic, and the total order refines it
    position = {s: i for i, s in enumerate(supports)}
    below = b._strictly_below
    for s in supports:
        if s in below[s]:
            raise BlockValidationError("closure_order", f"cycle through {s!r}")
        for t in below[s]:
            if position[t] > position[s]:
                raise BlockValidationError("total_order", f"{t!r} < {s!r} in closure order but comes later")
    # c decreases strictly up the closure order
    cval = {}
    for p in b.pairs:
        cval.setdefault(p.support, set()).add(p.c)
    for s in supports:
        for t in below[s]:
            if not min(cval[t]) > max(cval[s]):
                raise BlockValidationError("pairs.c", f"c must drop from {t!r} up to {s!r}")
    if b.l != W.rank:
        raise BlockValidationError("dims.l", f"l = {b.l} but the reflection rank is {W.rank}")
    if b.dim_zl < b.l or b.central_rank != b.dim_zl - b.l:
        raise BlockValidationError("dims", "need dimZL >= l and central_rank = dimZL - l")
    if b.regular_support is not None:
        on_reg = [p for p in b.pairs if p.support == b.regular_support]
        if len(on_reg) != 1:
            raise BlockValidationError("regular_support", "exactly one pair must sit on the regular class")
        triv = W.char_names[W.table.index(W.trivial().values)]
        if on_reg[0].phi != triv:
            raise BlockValidationError("regular_support", "the regular pair must carry the trivial character")
    if b.y_table is not None:
        _validate_y(b)


def _validate_y(b: BlockDescriptor) -> None:
    yt = b.y_table
    rows = dict(yt.rows)
    for k, p in enumerate(b.pairs):
        if p.id not in rows:
            raise BlockValidationError(f"y_table.rows.{p.id}", "missing row")
        try:
            labels, sizes = yt.classes_of(p.support)
        except KeyError:
            raise BlockValidationError("y_table.classes", f"no A(u) classes for {p.support!r}") from None
        if len(rows[p.id]) != len(labels):
            raise BlockValidationError(f"y_table.rows.{p.id}", "row length differs from class count")
        if sum(sizes) != p.a:
            raise BlockValidationError(f"y_table.classes.{p.support}", f"class sizes do not add up to a = {p.a}")
    for grp in b.groups:
        for i in grp:
            for j in grp:
                pi, pj = b.pairs[i], b.pairs[j]
                labels, sizes = yt.classes_of(pi.support)
                total = 0
                for s, x, y in zip(sizes, rows[pi.id], rows[pj.id]):
                    total = total + s * x * conj(y)
                value = total / pi.a if not isinstance(total, int) else Fraction(total, pi.a)
                if value != (1 if i == j else 0):
                    raise BlockValidationError(f"y_table.rows.{pi.id}",
                                               f"rows {pi.id!r}, {pj.id!r} fail first orthogonality")


def load_block(text: str) -> BlockDescriptor:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BlockValidationError("<document>", f"parse error: {exc}") from exc
    if not isinstance(data, dict):
        raise BlockValidationError("<document>", "top level must be an object")
    return BlockDescriptor.from_json(data)


def dump_block(b: BlockDescriptor) -> str:
    return json.dumps(b.to_json(), indent=2, ensure_ascii=False) + "\n"
