import pytest

from greenblocks.blocks import gl_principal_block, sl_all_blocks, sl_block
from greenblocks.exactalg import LaurentPolynomial
from greenblocks.ggg import (GroupType, SignData, allorth_expected, allorth_sum, centralizer_order,
                             centralizer_sign, gamma_tilde, gamma_u_projection, ggg_gram,
                             ggg_orthogonality_u, order_polynomial, order_star_identity, qprime_part,
                             zfunction_star_holds)
from greenblocks.lusztig import factorize
from greenblocks.weyl import build_group
from greenblocks.weyl.partitions import partition_label, partitions

q = LaurentPolynomial.q()
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


def _gl_order(n):
    return order_polynomial(GroupType("GL", n))


def test_gl2_gamma_tilde(gl_tables):
    t = gl_tables[2]
    g = gamma_tilde(t, "2")
    assert g.x == [q * (q - 1), -(q - 1)]
    assert g.value("1+1") == (q - 1) * (q ** 2 - 1)
    assert g.value("2") == -(q - 1)


def test_trivial_block_gamma():
    t = factorize(gl_principal_block(1))
    assert gamma_tilde(t, "1").x == [q - 1]


@pytest.mark.parametrize("n", range(1, 5))
def test_regular_gamma_at_identity_is_index_of_u(n, gl_tables):
    t = gl_tables[n]
    g = gamma_tilde(t, str(n))
    ident = partition_label((1,) * n)
    assert g.value(ident) == qprime_part(_gl_order(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_gamma_u_routes_and_gl_identity(n, gl_tables):
    # the projection of Gamma_u onto the block is q^c Gamma~_u, and for GL_n that is Gamma~_lam
    t = gl_tables[n]
    for lam in t.block.ids:
        y = gamma_u_projection(t, lam, check=True)
        c = t.block.pairs[t.block.index(lam)].c
        assert [v.shift(c) for v in y] == gamma_tilde(t, lam).y


def test_gamma_u_zero_off_block():
    t = factorize(sl_block(4, 2, y_table=True))
    assert not any(gamma_u_projection(t, "3+1"))


def test_gram_routes_and_vanishing():
    for n in range(1, 5):
        t = factorize(gl_principal_block(n))
        for i in range(t.size):
            for k in range(t.size):
                v = ggg_gram(t, i, k, route="all")
                if t.block.pairs[i].support != t.block.pairs[k].support:
                    assert v == ZERO


def test_gl2_gram_values(gl_tables):
    t = gl_tables[2]
    assert ggg_gram(t, "2", "2") == 1 - q
    lhs, rhs = ggg_orthogonality_u([t], "2", "2")
    assert lhs == rhs == -(q - 1)
    lhs, rhs = ggg_orthogonality_u([t], "1+1", "1+1")
    assert rhs == (q - 1) * (q ** 2 - 1) and lhs == rhs
    assert ggg_orthogonality_u([t], "2", "1+1") == (ZERO, ZERO)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sl_orthogonality_over_all_blocks(n):
    tables = [factorize(b) for b in sl_all_blocks(n)]
    units = []
    for b in (t.block for t in tables):
        for s in b.supports:
            units += [(s, a) for a in range(len(b.y_table.classes_of(s)[0]))]
    units = sorted(set(units))
    for u in units:
        for v in units:
            lhs, rhs = ggg_orthogonality_u(tables, u, v)
            assert lhs == rhs, (u, v)
            assert allorth_sum(tables, u, v) == allorth_expected(tables[0].block, u, v)


def test_sign_data():
    s = SignData.from_block(gl_principal_block(3))
    assert (s.eps_G, s.eta_L, s.sigma_G, s.eta_G) == (-1, 1, 1, 1)
    assert s.zeta_tilde == 1


# -- orders ------------------------------------------------------------------------
def test_order_polynomials():
    assert _gl_order(2) == q * (q - 1) * (q ** 2 - 1)
    assert order_polynomial(GroupType.parse("SL2")) == q * (q ** 2 - 1)
    assert order_polynomial(GroupType.parse("T[2,1]")) == (q ** 2 - 1) * (q - 1)
    assert GroupType.parse("GL2 x T[3]").dim == 7
    with pytest.raises(ValueError):
        GroupType.parse("Sp4")


@pytest.mark.parametrize("text", ["GL1", "GL3", "SL4", "T[1,1,1]", "T[4]", "GL2 x T[2,1]"])
def test_order_star(text):
    assert order_star_identity(GroupType.parse(text))


def test_centralizer_examples():
    assert centralizer_order("GL", (1, 1)) == _gl_order(2)
    assert centralizer_order("GL", (2,)) == q * (q - 1)
    assert centralizer_order("GL", (2,), q=2) == 2
    assert centralizer_sign("GL", (2,)) == -1 and centralizer_sign("GL", (1, 1)) == 1
    assert centralizer_order("SL", (2,), q=5) == 10
    assert centralizer_order("SL", (2,), q=3) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_centralizer_sizes_sum_to_unipotent_count(n):
    # Steinberg: the number of unipotent elements is q^(n^2 - n)
    total = LaurentPolynomial()
    order = _gl_order(n)
    for lam in partitions(n):
        total = total + order.exact_div(centralizer_order("GL", lam))
    assert total == q ** (n * n - n)


@pytest.mark.parametrize("name", ["A1", "A4", "B3", "D4", "I2(6)", "A2 x B2"])
def test_zfunction_star(name):
    assert zfunction_star_holds(build_group(name))
