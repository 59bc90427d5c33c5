"""The bundled table of local systems on the subregular unipotent class.

Records are stored as rank templates and instantiated for a concrete rank by
``subregular_lookup``.  A system is *standard* when its character is the
reflection character of the full Weyl group (the block is then the principal
one and Q~ of the pair is q^-1 Id + phi~).

>>> rec = subregular_lookup("B", 3)
>>> [(s.local_system, s.phi, s.degree, s.standard) for s in rec.systems]
[('1', '(2|1)', 3, True), ('eps', '(2.1|-)', 2, False)]
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..weyl import build_group, exterior_reflection_characters
from ..weyl.partitions import bipartition_label

__all__ = ["SubregularSystem", "SubregularRecord", "subregular_lookup", "subregular_records",
           "SUBREGULAR_SCHEMA", "UncoveredType"]

SUBREGULAR_SCHEMA = "greenblocks.subregular/1"
EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}


class UncoveredType(KeyError):
    pass


@dataclass(frozen=True)
class SubregularSystem:
    local_system: str
    levi: str            # "T", "G" or "L" (another proper Levi)
    weyl: str            # type of W_G(L), e.g. "B3"; "1" for the trivial group
    phi: str             # name of the character of W_G(L); computable label when the type is classical
    degree: int
    standard: bool


@dataclass(frozen=True)
class SubregularRecord:
    type: str
    rank: int
    family: str          # the table row, e.g. "D odd"
    class_label: str
    a_u: str
    systems: tuple

    @property
    def standard_system(self) -> SubregularSystem:
        return next(s for s in self.systems if s.standard)


def _lin(expr, n):
    a, b, *d = expr
    v = Fraction(a * n + b, d[0] if d else 1)
    if v.denominator != 1:
        raise ValueError(f"non-integral rank expression {expr} at n = {n}")
    return int(v)


def _weyl_type(template: str, n: int) -> str:
    if template in ("1", "G2", "F4", "E6", "E7", "E8") or re.fullmatch(r"[ABCD]\d+", template):
        return template
    fam, body = template[0], template[1:].strip("{}")
    for expr, val in (("(n-5)/2", (n - 5) // 2), ("n/2", n // 2), ("n-1", n - 1),
                      ("n-2", n - 2), ("n-3", n - 3), ("n", n)):
        if body == expr:
            return f"{fam}{val}" if val > 0 else "1"
    raise ValueError(f"bad Weyl-type template {template!r}")


def _classical(weyl: str) -> bool:
    return weyl == "1" or weyl[0] in "ABCD"


def _resolve_phi(entry: dict, weyl: str, n: int) -> str:
    phi = entry["phi"]
    if "label" in entry:
        return entry["label"]
    if not _classical(weyl):
        return phi
    W = build_group(weyl)
    if "bipartition" in entry:
        alpha, beta = (tuple(sorted((_lin(e, n) for e in part), reverse=True))
                       for part in entry["bipartition"])
        return bipartition_label((alpha, beta))
    if phi == "1":
        return W.char_names[W.char_index_of(W.trivial())]
    if phi == "r":
        return W.char_names[W.char_index_of(exterior_reflection_characters(W)[1])]
    raise ValueError(f"cannot resolve character {phi!r} of {weyl}")


def _class_label(type_: str, template: str, n: int) -> str:
    # classical classes are Jordan types written with n-expressions, largest part first
    if type_ == "A":
        # the table's "(1,n-1)" is read as the Jordan type (n, 1) of SL_{n+1}
        return f"{n}+1"
    if not template.startswith("("):
        return template
    parts = []
    for tok in template[1:-1].split(","):
        tok = tok.strip()
        if "n" in tok:
            coef, _, rest = tok.partition("n")
            a = int(coef) if coef else 1
            parts.append(a * n + (int(rest) if rest else 0))
        else:
            parts.append(int(tok))
    parts = sorted((p for p in parts if p > 0), reverse=True)
    return "+".join(map(str, parts))


@lru_cache(maxsize=1)
def _load() -> dict:
    text = resources.files("greenblocks").joinpath("data/subregular.json").read_text()
    data = json.loads(text)
    if data.get("schema") != SUBREGULAR_SCHEMA:
        raise ValueError(f"unsupported subregular dataset schema {data.get('schema')!r}")
    return data


def subregular_records() -> list:
    """The raw table rows (templates), one per type and rank family."""
    return list(_load()["subregular"])


def subregular_lookup(type_: str, rank: int | None = None) -> SubregularRecord:
    """The record for a simply connected quasi-simple group of the given type and rank."""
    if type_ in EXCEPTIONAL_RANK:
        if rank not in (None, EXCEPTIONAL_RANK[type_]):
            raise UncoveredType(f"{type_} has rank {EXCEPTIONAL_RANK[type_]}")
        rank = EXCEPTIONAL_RANK[type_]
    if not isinstance(rank, int):
        raise UncoveredType(f"type {type_} needs an integer rank")
    n = rank
    for row in _load()["subregular"]:
        if row["type"] != type_:
            continue
        lo, hi = row["ranks"]
        if n < lo or (hi is not None and n > hi):
            continue
        parity = row.get("parity")
        if parity and (n % 2 == 0) != (parity == "even"):
            continue
        systems = []
        for s in row["systems"]:
            weyl = _weyl_type(s["weyl"], n)
            phi = _resolve_phi(s, weyl, n)
            standard = s["phi"] == "r" and weyl in (type_, f"{type_}{n}")
            systems.append(SubregularSystem(s["local_system"], s["levi"], weyl, phi,
                                            _lin(s["degree"], n), standard))
        family = type_ + (f" {parity}" if parity else "")
        return SubregularRecord(type_, n, family, _class_label(type_, row["class"], n),
                                row["A_u"], tuple(systems))
    raise UncoveredType(f"no subregular record for {type_}{rank}")
