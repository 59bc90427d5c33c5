import json
from pathlib import Path

import pytest

from greenblocks.blocks import (BlockValidationError, UncoveredType, dump_block, gl_levi_block,
                                gl_principal_block, load_block, sl_all_blocks, sl_block, subregular_lookup,
                                subregular_records)
from greenblocks.weyl.partitions import dominates, parse_partition


def test_gl_small_blocks():
    b2 = gl_principal_block(2)
    assert b2.ids == ("1+1", "2") and [p.c for p in b2.pairs] == [1, 0]
    b3 = gl_principal_block(3)
    assert {p.id: p.c for p in b3.pairs} == {"3": 0, "2+1": 1, "1+1+1": 3}
    b1 = gl_principal_block(1)
    assert b1.size == 1 and b1.W.order == 1


def test_gl_regular_pair_is_trivial_character():
    for n in range(1, 7):
        b = gl_principal_block(n)
        reg = [p for p in b.pairs if p.support == b.regular_support]
        assert len(reg) == 1 and reg[0].phi == str(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_gl_total_order_refines_dominance(n):
    b = gl_principal_block(n)
    parts = [parse_partition(i) for i in b.ids]
    for i, lam in enumerate(parts):
        for mu in parts[i + 1:]:
            assert not (dominates(lam, mu) and lam != mu)


def test_sl_block_examples():
    assert sl_block(2, 2).ids == ("2",) and sl_block(2, 2).W.order == 1
    b = sl_block(4, 2)
    assert set(b.ids) == {"4", "2+2"} and b.W.order == 2
    b = sl_block(6, 3)
    assert set(b.ids) == {"6", "3+3"} and b.W.order == 2


def test_sl_c_may_be_half_integral():
    b = sl_block(4, 2)
    cs = [p.c for p in b.pairs]
    assert all((x - cs[0]).denominator == 1 for x in cs)


@pytest.mark.parametrize("n", range(1, 9))
def test_sl_all_blocks_one_per_central_character(n):
    blocks = sl_all_blocks(n)
    assert len(blocks) == n
    for b in blocks:
        assert b.y_table is not None


def test_sl_twist_must_be_coprime():
    with pytest.raises(ValueError):
        sl_block(6, 6, twist=2)


def test_levi_block():
    b = gl_levi_block((2, 1))
    assert b.size == 2 and b.W.order == 2


def test_rank_limit():
    with pytest.raises(ValueError):
        gl_principal_block(9)


def test_round_trip():
    for b in (gl_principal_block(3), sl_block(4, 2, y_table=True), gl_levi_block((2, 2))):
        again = load_block(dump_block(b))
        assert again.to_json() == b.to_json()
        assert again.ids == b.ids


def _doc(b):
    return json.loads(dump_block(b))


def test_rejects_order_violating_closure():
    d = _doc(gl_principal_block(3))
    d["total_order"] = ["2+1", "1+1+1", "3"]
    with pytest.raises(BlockValidationError, match="total_order"):
        load_block(json.dumps(d))


def test_rejects_non_unitary_y_row():
    d = _doc(sl_block(4, 2, y_table=True))
    d["y_table"]["rows"]["4"] = [1, 1, 1, 2]
    with pytest.raises(BlockValidationError, match="orthogonality"):
        load_block(json.dumps(d))


def test_rejects_characters_not_bijective():
    d = _doc(gl_principal_block(3))
    d["pairs"][0]["phi"] = "3"
    with pytest.raises(BlockValidationError, match="bijection"):
        load_block(json.dumps(d))


def test_rejects_malformed_json():
    with pytest.raises(BlockValidationError):
        load_block("{not json")
    with pytest.raises(BlockValidationError):
        load_block(json.dumps({"schema": "nope"}))


def test_rejects_bad_regular_pair():
    d = _doc(gl_principal_block(3))
    d["regular_support"] = "2+1"
    with pytest.raises(BlockValidationError, match="regular"):
        load_block(json.dumps(d))


# -- subregular dataset ----------------------------------------------------------
def test_g2_record():
    r = subregular_lookup("G2")
    assert r.class_label == "G2(a1)" and r.a_u == "W(A2)"
    assert [s.local_system for s in r.systems] == ["1", "r", "eps"]
    assert r.systems[0].phi == "r" and r.systems[2].levi == "G"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_b_records(n):
    r = subregular_lookup("B", n)
    assert r.a_u == "W(A1)"
    eps = next(s for s in r.systems if s.local_system == "eps")
    assert eps.phi == f"({n - 1}.1|-)"


def test_d_odd_record():
    r = subregular_lookup("D", 5)
    assert r.a_u == "Z/4"
    assert [s.local_system for s in r.systems] == ["1", "-1", "i", "-i"]


def test_every_row_has_a_standard_reflection_system():
    for row in subregular_records():
        for parity in (0, 1):
            rank = row["ranks"][0] + parity
            if row["ranks"][1] is not None and rank > row["ranks"][1]:
                continue
            try:
                r = subregular_lookup(row["type"], rank)
            except UncoveredType:
                continue
            s = r.standard_system
            assert s.levi == "T" and s.degree == rank


def test_uncovered_type():
    with pytest.raises((UncoveredType, KeyError, ValueError)):
        subregular_lookup("H3")


def test_documented_example_loads():
    text = (Path(__file__).parents[1] / "docs" / "block_format.md").read_text()
    doc = text.split("```json\n", 1)[1].split("```", 1)[0]
    b = load_block(doc)
    assert b.to_json() == gl_principal_block(3).to_json()
