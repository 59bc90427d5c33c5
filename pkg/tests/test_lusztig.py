import json
import random

import pytest

from greenblocks.blocks import dump_block, gl_principal_block, load_block, sl_block
from greenblocks.exactalg import LaurentPolynomial, RationalFunction, as_ratfunc
from greenblocks.lusztig import (check_pattern, check_reconstruction, duality, duality_y, factorize,
                                 green_function, qg_scalar_product, qg_transport, scalar_product_green,
                                 torus_order, xi_matrix)
from greenblocks.lusztig.algorithm import FactorizationError, omega_matrix
from greenblocks.weyl import ClassFunction, inner_product

q = LaurentPolynomial.q()
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


def test_gl2_by_hand(gl_tables):
    t = gl_tables[2]
    assert t.block.ids == ("1+1", "2")
    assert t.omega == [[q, -ONE], [-ONE, q]]
    d = q ** 2 - 1
    assert t.xi == [[RationalFunction(q, d), RationalFunction(1, d)], [RationalFunction(1, d), RationalFunction(q, d)]]
    assert t.ptilde == [[ONE, q ** -1], [ZERO, ONE]]
    assert t.lam[0][0] == RationalFunction(q, d) and t.lam[1][1] == as_ratfunc(q ** -1)
    assert t.unnormalized_p(0, 1) == ONE


def test_trivial_block_xi():
    t = factorize(gl_principal_block(1))
    assert t.xi == [[as_ratfunc(1)]] and t.ptilde == [[ONE]]
    assert xi_matrix(sl_block(3, 3)) == [[as_ratfunc(1)]]


def test_omega_xi_inverse_gl3():
    b = gl_principal_block(3)
    om, xi = omega_matrix(b), xi_matrix(b, check=True)
    n = len(om)
    for i in range(n):
        for k in range(n):
            s = sum((as_ratfunc(om[i][j]) * xi[j][k] for j in range(n)), as_ratfunc(0))
            assert s == as_ratfunc(1 if i == k else 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_regular_and_subregular_omega_entries(n):
    t = factorize(gl_principal_block(n))
    b, l = t.block, n - 1
    rho, sigma = b.index(str(n)), b.index(f"{n - 1}+1")
    assert t.omega[rho][rho] == q ** l
    assert t.omega[sigma][rho] == -(q ** (l - 1))


@pytest.mark.parametrize("block", [gl_principal_block(n) for n in range(1, 7)] +
                         [sl_block(8, d) for d in (1, 2, 4, 8)] + [sl_block(6, 3)])
def test_routes_agree_and_invariants_hold(block):
    a, b = factorize(block, route="omega"), factorize(block, route="xi")
    assert a.ptilde == b.ptilde and a.lam == b.lam
    check_pattern(a)
    check_reconstruction(a)
    assert all(a.ptilde[i][i] == ONE for i in range(a.size))


def test_refinement_independence_gl6():
    base = gl_principal_block(6)
    d = json.loads(dump_block(base))
    order = d["total_order"]
    i, j = order.index("2+2+2"), order.index("3+1+1+1")
    assert j == i + 1
    order[i], order[j] = order[j], order[i]
    d["pairs"] = sorted(d["pairs"], key=lambda p: order.index(p["id"]))
    other = load_block(json.dumps(d))
    t0, t1 = factorize(base), factorize(other)
    perm = [t0.block.index(x) for x in t1.block.ids]
    for a in range(t1.size):
        for c in range(t1.size):
            assert t1.ptilde[a][c] == t0.ptilde[perm[a]][perm[c]]


def test_wrong_springer_map_is_rejected():
    d = json.loads(dump_block(gl_principal_block(3)))
    d["pairs"][1]["phi"], d["pairs"][2]["phi"] = d["pairs"][2]["phi"], d["pairs"][1]["phi"]
    d.pop("regular_support")
    with pytest.raises(FactorizationError):
        factorize(load_block(json.dumps(d)))


@pytest.mark.parametrize("n", range(1, 6))
def test_unnormalized_p_is_positive_polynomial(n, gl_tables):
    t = gl_tables[n]
    for k in range(t.size):
        for i in range(t.size):
            assert t.ptilde[k][i].is_zero() or t.ptilde[k][i].degree <= 0
            p = t.unnormalized_p(k, i)
            assert p.is_polynomial()
            assert all(isinstance(c, int) and c > 0 for _, c in p.items())


@pytest.mark.parametrize("n", range(1, 6))
def test_regular_qtilde_is_constant_one(n, gl_tables):
    t = gl_tables[n]
    rho = t.block.index(t.block.regular_support)
    assert all(v == ONE for v in t.qtilde[rho].values)


def test_gl2_green_functions(gl_tables):
    t = gl_tables[2]
    g1, gs = green_function(t, "1+1"), green_function(t, "2")
    assert g1.value("1+1") == q + 1 and g1.value("2") == ONE
    assert gs.value("1+1") == 1 - q and gs.value("2") == ONE


def test_qg_transport_examples(gl_tables):
    t = gl_tables[3]
    W = t.block.W
    for i, phi in enumerate(t.phis):
        x, _ = qg_transport(t, phi)
        assert x == [ONE if k == i else ZERO for k in range(t.size)]
    for c in range(W.num_classes):
        gamma = ClassFunction(W, [W.centralizer_order(c) if k == c else 0 for k in range(W.num_classes)])
        _, y = qg_transport(t, gamma)
        assert y == [f.values[c] for f in t.qtilde]
    x, y = qg_transport(t, ClassFunction(W, [0] * W.num_classes))
    assert not any(x) and not any(y)


def test_duality_gl2(gl_tables):
    t = gl_tables[2]
    assert duality(t, [ZERO, ONE]) == [ONE, ZERO]


def test_duality_involution_random(gl_tables):
    rng = random.Random(3)
    t = gl_tables[4]
    for _ in range(10):
        x = [LaurentPolynomial.from_dict({rng.randint(-2, 2): rng.randint(-3, 3)}) for _ in range(t.size)]
        assert duality(t, duality(t, x)) == x
        assert duality_y(t, duality_y(t, x)) == x


def test_gl2_green_scalar_products(gl_tables):
    t = gl_tables[2]
    assert scalar_product_green(t, "1+1", "1+1") == RationalFunction(2, (q - 1) ** 2)
    assert scalar_product_green(t, "1+1", "2") == as_ratfunc(0)
    assert scalar_product_green(t, "2", "2") == RationalFunction(2, q ** 2 - 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_qg_scalar_product_through_xi(n, gl_tables):
    t = gl_tables[n]
    W = t.block.W
    rng = random.Random(n)
    zinv = ClassFunction(W, [RationalFunction(1, v) for v in torus_order(t).values])
    for _ in range(5):
        th = ClassFunction(W, [LaurentPolynomial.from_dict({rng.randint(-1, 2): rng.randint(-3, 3)})
                               for _ in range(W.num_classes)])
        ph = ClassFunction(W, [rng.randint(-2, 2) for _ in range(W.num_classes)])
        assert qg_scalar_product(t, th, ph) == as_ratfunc(inner_product(zinv * th, ph))


def test_subregular_entry_is_q_inverse():
    for n in range(2, 7):
        t = factorize(gl_principal_block(n))
        b = t.block
        assert t.ptilde[b.index(f"{n - 1}+1")][b.index(str(n))] == q ** -1
