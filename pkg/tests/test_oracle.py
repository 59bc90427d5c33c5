import json

import numpy as np
import pytest

from greenblocks.ggg import GroupType, centralizer_order, order_polynomial
from greenblocks.oracle import (FiniteMatrixGroup, SizeBoundExceeded, branching_bruteforce, enumerate_unipotent,
                                induced_ggg, kostka_foulkes, kostka_number)
from greenblocks.oracle import cache
from greenblocks.oracle.branching import sn_characters
from greenblocks.oracle.matgroups import _matmul
from greenblocks.weyl import build_group
from greenblocks.weyl.partitions import parse_partition, partitions


def _classes(kind, n, q):
    return {c.jordan: c for c in enumerate_unipotent(FiniteMatrixGroup(kind, n, q))}


def test_gl2_f2():
    c = _classes("GL", 2, 2)
    assert {k: v.centralizer for k, v in c.items()} == {"1+1": 6, "2": 2}


def test_gl2_f3_regular():
    assert _classes("GL", 2, 3)["2"].centralizer == 6


def test_sl2_f5_regular_splits():
    c = _classes("SL", 2, 5)["2"]
    assert c.classes == 2 and c.centralizer == 10
    c3 = _classes("SL", 2, 3)["2"]
    assert c3.classes == 2 and c3.centralizer == 6


@pytest.mark.parametrize("kind, n, q", [("GL", 2, 2), ("GL", 2, 3), ("GL", 3, 2), ("GL", 2, 5),
                                        ("SL", 3, 2), ("SL", 2, 5), ("GL", 3, 3)])
def test_orders_and_centralizers_match_polynomials(kind, n, q):
    g = FiniteMatrixGroup(kind, n, q)
    assert g.order == order_polynomial(GroupType(kind, n)).evaluate(q)
    for c in enumerate_unipotent(g):
        assert c.centralizer == centralizer_order(kind, parse_partition(c.jordan), q=q)
        assert c.classes * (g.order // c.centralizer) == c.total


def test_size_bounds():
    with pytest.raises(SizeBoundExceeded):
        FiniteMatrixGroup("GL", 3, 7)
    with pytest.raises(SizeBoundExceeded):
        FiniteMatrixGroup("GL", 4, 2)
    with pytest.raises(ValueError):
        FiniteMatrixGroup("GL", 2, 4)


@pytest.mark.parametrize("p", [2, 3])
def test_gelfand_graev_gl2(p):
    v = induced_ggg(2, p, "2")
    assert v["1+1"] == (p - 1) * (p * p - 1)
    assert v["2"] == -(p - 1)


def test_gelfand_graev_vanishes_off_unipotents_gl2_f3():
    # Ind_U^G psi by the induced-character formula on every element of GL_2(F_3)
    p = 3
    g = FiniteMatrixGroup("GL", 2, p).elements.astype(np.int64)
    inv = {}
    flat = [tuple(x.ravel()) for x in g]
    eye = (1, 0, 0, 1)
    for i, x in enumerate(g):
        for j, y in enumerate(g):
            if tuple((_matmul(x[None].astype(np.int8), y[None].astype(np.int8), p)[0]).ravel()) == eye:
                inv[i] = j
                break
    w = np.exp(2j * np.pi / p)

    def psi(m):
        a, b, c, d = m
        return w ** b if (a, c, d) == (1, 0, 1) else 0

    for k, x in enumerate(g):
        conj = _matmul(_matmul(g.astype(np.int8), np.broadcast_to(x.astype(np.int8), g.shape), p),
                       g[[inv[i] for i in range(len(g))]].astype(np.int8), p)
        val = sum(psi(tuple(m.ravel())) for m in conj) / p
        unipotent = not ((_matmul(((x - np.eye(2, dtype=np.int64)) % p).astype(np.int8)[None],
                                  ((x - np.eye(2, dtype=np.int64)) % p).astype(np.int8)[None], p)).any())
        if not unipotent:
            assert abs(val) < 1e-9
        elif flat[k] == eye:
            assert round(val.real) == (p - 1) * (p * p - 1)


def test_kostka_examples():
    assert kostka_foulkes((2, 1), (2, 1)) == {0: 1}
    assert kostka_foulkes((2,), (1, 1)) == {1: 1}
    assert kostka_foulkes((1, 1), (2,)) == {}
    assert kostka_foulkes((2, 2), (1, 1, 1, 1)) == {2: 1, 4: 1}
    assert kostka_foulkes((3, 1), (1, 1, 1, 1)) == {3: 1, 4: 1, 5: 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_at_one_counts_tableaux(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert sum(kostka_foulkes(lam, mu).values()) == kostka_number(lam, mu)


def test_branching_examples():
    b = branching_bruteforce(3, (2, 1))
    assert b[("2 x 1", "2+1")] == 1 and b[("1+1 x 1", "2+1")] == 1
    assert b[("2 x 1", "3")] == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_sn_characters_match_weyl_tables(n):
    chars = sn_characters(n)
    W = build_group(f"A{n - 1}")
    for j, name in enumerate(W.char_names):
        for c, cls in enumerate(W.class_names):
            assert chars[parse_partition(name)][parse_partition(cls)] == W.table[j][c]


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("GREENBLOCKS_CACHE_DIR", str(tmp_path))
    calls = []

    def compute():
        calls.append(1)
        return {"x": 1}

    assert cache.cached("probe", {"a": 1}, compute) == {"x": 1}
    assert cache.cached("probe", {"a": 1}, compute) == {"x": 1}
    assert len(calls) == 1
    files = list(tmp_path.glob("probe-*.json"))
    assert len(files) == 1 and json.loads(files[0].read_text())["result"] == {"x": 1}
    cache.set_cache_enabled(False)
    try:
        cache.cached("probe", {"a": 1}, compute)
        assert len(calls) == 2
    finally:
        cache.set_cache_enabled(True)
