import pytest

from greenblocks.blocks import gl_principal_block, subregular_lookup
from greenblocks.exactalg import LaurentPolynomial
from greenblocks.lusztig import factorize
from greenblocks.oracle import branching_bruteforce
from greenblocks.restriction import (branching_matrix, gl_levi_embedding, gl_subregular_record,
                                     pipeline_subregular_row, r_matrix, restrict_ggg, restrict_green,
                                     restrict_green_via_r, sign_restriction_holds, subregular_qtilde,
                                     subregular_restriction, subregular_restriction_ggg)
from greenblocks.restriction.levi import LeviEmbedding

q = LaurentPolynomial.q()
ONE = LaurentPolynomial.constant(1)


def test_branching_gl3():
    e = gl_levi_embedding(3, (2, 1))
    res = branching_matrix(e)
    col = e.ambient.index("2+1")
    assert {e.sub.ids[g]: res[g][col] for g in range(e.sub.size)} == {"1+1 x 1": 1, "2 x 1": 1}
    triv = e.ambient.index("3")
    assert [res[g][triv] for g in range(e.sub.size)] == [1 if e.sub.ids[g] == "2 x 1" else 0
                                                          for g in range(e.sub.size)]


@pytest.mark.parametrize("n, comp", [(4, (2, 2)), (5, (3, 2)), (5, (2, 2, 1)), (6, (3, 3))])
def test_branching_dimension_and_oracle(n, comp):
    e = gl_levi_embedding(n, comp)
    res = branching_matrix(e)
    WG, WM = e.ambient.W, e.sub.W
    brute = branching_bruteforce(n, comp)
    for i in range(e.ambient.size):
        deg = WG.degree(e.ambient.phi_index[i])
        assert sum(res[g][i] * WM.degree(e.sub.phi_index[g]) for g in range(e.sub.size)) == deg
    for g in range(e.sub.size):
        for i in range(e.ambient.size):
            key = (WM.char_names[e.sub.phi_index[g]], WG.char_names[e.ambient.phi_index[i]])
            assert res[g][i] == brute.get(key, 0)


def test_r_matrix_gl2_torus():
    d = r_matrix(gl_levi_embedding(2, (1, 1)))
    assert d.R == [[1 + q ** -1], [ONE]]


@pytest.mark.parametrize("n", range(1, 6))
def test_self_embedding_is_identity(n):
    e = gl_levi_embedding(n, (n,))
    d = r_matrix(e)
    assert d.R == [[ONE if i == j else LaurentPolynomial() for j in range(e.sub.size)] for i in range(e.ambient.size)]
    for v in e.ambient.W.class_names:
        assert restrict_green(e, v) == {v: 1}
    for i in e.ambient.ids:
        assert restrict_ggg(e, i, d) == {i: ONE}


def test_restrict_green_gl2_torus():
    e = gl_levi_embedding(2, (1, 1))
    assert restrict_green(e, "1+1") == {"1 x 1": 2}
    assert restrict_green(e, "2") == {}


def test_restrict_ggg_gl2_torus():
    e = gl_levi_embedding(2, (1, 1))
    assert restrict_ggg(e, "2") == {"1 x 1": ONE}
    assert restrict_ggg(e, "1+1") == {"1 x 1": q + 1}


@pytest.mark.parametrize("n, comp", [(3, (2, 1)), (4, (2, 1, 1)), (5, (3, 2)), (6, (2, 2, 2))])
def test_green_counting_matches_r(n, comp):
    e = gl_levi_embedding(n, comp)
    d = r_matrix(e)
    tM = e.table_m
    for v in e.ambient.W.class_names:
        y = [LaurentPolynomial()] * tM.size
        for vp, coef in restrict_green(e, v).items():
            j = e.sub.W.class_index(vp)
            y = [a + f.values[j] * coef for a, f in zip(y, tM.qtilde)]
        assert restrict_green_via_r(d, v) == y


def test_regular_row_and_sign():
    for n in range(2, 6):
        for comp in [(n - 1, 1), (1,) * n]:
            e = gl_levi_embedding(n, comp)
            d = r_matrix(e)
            rho = e.ambient.index(e.ambient.regular_support)
            rho_m = e.sub.index(e.sub.regular_support)
            assert d.R[rho][rho_m] == ONE
            assert sign_restriction_holds(e)


def test_bad_composition():
    with pytest.raises(ValueError):
        gl_levi_embedding(4, (2, 1))


def test_twisted_embedding_not_implemented():
    e = gl_levi_embedding(2, (1, 1))
    with pytest.raises(NotImplementedError):
        LeviEmbedding(e.ambient, e.sub, e.embedding, e.support_map, twist="2", eps=-1)


# -- subregular closed forms -------------------------------------------------------
def test_subregular_qtilde_gl():
    for n in range(2, 7):
        b = gl_principal_block(n)
        rec = gl_subregular_record(n)
        t = factorize(b)
        i = b.index(rec.class_label)
        assert subregular_qtilde(rec, b) == t.qtilde[i]
    b = gl_principal_block(2)
    v = subregular_qtilde(gl_subregular_record(2), b)
    W = b.W
    assert v.values[W.identity_class] == 1 + q ** -1
    assert v.values[1 - W.identity_class] == -1 + q ** -1


def test_subregular_restriction_examples():
    assert subregular_restriction(gl_levi_embedding(3, (2, 1))) == {"1+1 x 1": ONE, "2 x 1": ONE}
    assert subregular_restriction(gl_levi_embedding(2, (1, 1))) == {"1 x 1": 1 + q ** -1}
    assert subregular_restriction(gl_levi_embedding(4, (4,))) == {"3+1": ONE}


@pytest.mark.parametrize("n, comp", [(4, (2, 2)), (5, (2, 2, 1)), (6, (3, 2, 1)), (6, (2, 2, 2))])
def test_subregular_closed_form_many_components(n, comp):
    e = gl_levi_embedding(n, comp)
    assert subregular_restriction(e) == pipeline_subregular_row(e)


def test_subregular_ggg_is_star_of_q_level():
    e = gl_levi_embedding(5, (3, 2))
    g, qlev = subregular_restriction_ggg(e), subregular_restriction(e)
    sigma = e.ambient.index("4+1")
    assert g == {k: v.star() for k, v in qlev.items()}
    assert g == restrict_ggg(e, sigma)


def test_gl_record_uses_type_a():
    assert gl_subregular_record(4) == subregular_lookup("A", 3)
    with pytest.raises(ValueError):
        gl_subregular_record(1)
