from fractions import Fraction

import pytest

from greenblocks.exactalg import LaurentPolynomial
from greenblocks.oracle import branching_bruteforce
from greenblocks.weyl import (ClassFunction, UnsupportedRank, build_group, exterior_reflection_characters,
                              fusion_restrict, induce, inner_product, parabolic_embedding,
                              torus_order_function, young_embedding)

q = LaurentPolynomial.q()

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "I2(3)", "I2(4)", "I2(6)", "A1 x A2", "B2 x A1"]


def _cls(W, label):
    return W.class_index(label)


def test_s3_classes_and_table():
    W = build_group("A2")
    assert W.order == 6
    assert sorted(W.class_sizes) == [1, 2, 3]
    rows = {tuple(W.table[j][_cls(W, c)] for c in ("1+1+1", "2+1", "3")) for j in range(3)}
    assert rows == {(1, 1, 1), (1, -1, 1), (2, 0, -1)}


def test_b2_has_five_classes():
    W = build_group("B2")
    assert W.order == 8 and W.num_classes == 5


@pytest.mark.parametrize("name", TYPES)
def test_orthogonality_relations(name):
    W = build_group(name)
    assert sum(W.class_sizes) == W.order
    k = W.num_classes
    for i in range(k):
        for j in range(k):
            row = inner_product(ClassFunction(W, W.table[i]), ClassFunction(W, W.table[j]))
            assert row == (1 if i == j else 0)
            col = sum(W.table[x][i] * W.table[x][j] for x in range(k))
            assert col == (W.centralizer_order(i) if i == j else 0)


def test_rank_bounds():
    build_group("A9")
    for bad in ("A10", "B9", "D9"):
        with pytest.raises(UnsupportedRank):
            build_group(bad)


def test_exterior_powers_of_s3():
    W = build_group("A2")
    ext = exterior_reflection_characters(W)
    assert len(ext) == 3
    assert ext[0] == W.trivial()
    assert ext[2] == W.sign()
    std = [ext[1].values[_cls(W, c)] for c in ("1+1+1", "2+1", "3")]
    assert std == [2, 0, -1]


@pytest.mark.parametrize("name", ["B3", "D4", "I2(6)"])
def test_top_exterior_power_is_sign(name):
    W = build_group(name)
    ext = exterior_reflection_characters(W)
    assert ext[0] == W.trivial() and ext[-1] == W.sign()


def test_torus_orders_of_symmetric_groups():
    W = build_group("A1")
    z = torus_order_function(W, 2)
    assert z.values[W.identity_class] == (q - 1) ** 2
    other = 1 - W.identity_class
    assert z.values[other] == q ** 2 - 1
    W4 = build_group("A3")
    z4 = torus_order_function(W4, 4)
    for c, name in enumerate(W4.class_names):
        cycles = [int(x) for x in name.split("+")]
        want = LaurentPolynomial.constant(1)
        for m in cycles:
            want = want * (q ** m - 1)
        assert z4.values[c] == want
    assert torus_order_function(build_group("B3"), 3).values[build_group("B3").identity_class] == (q - 1) ** 3


def test_inner_products():
    W = build_group("A2")
    assert inner_product(W.trivial(), W.sign()) == 0
    S2 = build_group("A1")
    zbar = ClassFunction(S2, S2.charpolys)
    assert inner_product(zbar, S2.trivial()) == q


def test_restriction_and_induction_s3():
    e = young_embedding(3, (2, 1))
    W, M = e.ambient, e.sub
    std = exterior_reflection_characters(W)[1]
    res = fusion_restrict(std, e)
    assert res == M.trivial() + M.sign()
    assert fusion_restrict(W.trivial(), e) == M.trivial()
    assert fusion_restrict(W.sign(), e) == M.sign()
    ind = induce(M.trivial(), e)
    assert ind == W.trivial() + std
    assert inner_product(induce(fusion_restrict(W.trivial(), e), e), W.trivial()) == 1


def test_induction_from_trivial_subgroup_is_regular():
    e = young_embedding(2, (1, 1))
    ind = induce(e.sub.trivial(), e)
    assert ind.values[e.ambient.identity_class] == 2
    assert ind.values[1 - e.ambient.identity_class] == 0


@pytest.mark.parametrize("n, comp", [(4, (2, 2)), (5, (3, 2)), (6, (3, 2, 1)), (6, (4, 2))])
def test_branching_against_enumeration(n, comp):
    e = young_embedding(n, comp)
    W, M = e.ambient, e.sub
    brute = branching_bruteforce(n, comp)
    for j in range(W.num_classes):
        res = fusion_restrict(ClassFunction(W, W.table[j]), e)
        for g in range(M.num_classes):
            m = inner_product(ClassFunction(M, M.table[g]), res)
            assert m == brute.get((M.char_names[g], W.char_names[j]), 0)


def test_parabolic_embedding_preserves_sizes():
    e = parabolic_embedding("B", 3, (1,), 2)
    W, M = e.ambient, e.sub
    counts = [0] * W.num_classes
    for j, c in enumerate(e.fusion):
        counts[c] += M.class_sizes[j]
    assert sum(counts) == M.order
    assert fusion_restrict(W.sign(), e) == M.sign()


def test_class_function_arithmetic():
    W = build_group("A2")
    f = W.trivial() * 3 + W.sign()
    assert inner_product(f, W.trivial()) == 3
    assert inner_product(f * Fraction(1, 2), W.sign()) == Fraction(1, 2)
