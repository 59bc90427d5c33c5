import importlib
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from greenblocks.exactalg import (BACKEND, Cyclotomic, LaurentPolynomial, PoleError, RationalFunction,
                                  ZeroBaseError, as_ratfunc, conj, cyclotomic_polynomial, euler_phi,
                                  evaluate, qprime_split, star)
from greenblocks.exactalg import _pykernels

q = LaurentPolynomial.q()

coeff = st.one_of(st.integers(-6, 6), st.fractions(min_value=-3, max_value=3, max_denominator=4))
laurent = st.builds(lambda low, cs: LaurentPolynomial(cs, low),
                    st.integers(-4, 4), st.lists(coeff, max_size=5))


# -- Laurent polynomials -------------------------------------------------------
def test_star_examples():
    assert star(q ** 2 + 1) == q ** -2 + 1
    assert star(5) == 5
    assert star(q - 1) == q ** -1 - 1


def test_qprime_split_examples():
    assert qprime_split(q * (q - 1) * (q ** 2 - 1)) == (1, (q - 1) * (q ** 2 - 1))
    assert qprime_split(q ** 3) == (3, LaurentPolynomial.constant(1))
    assert qprime_split(q ** -1 * (q + 1)) == (-1, q + 1)


def test_evaluate_examples():
    assert evaluate(q ** 2 - 1, 3) == 8
    assert evaluate(q ** -1, 2) == Fraction(1, 2)
    with pytest.raises(PoleError):
        RationalFunction(1, q - 1).evaluate(1)
    with pytest.raises(ZeroBaseError):
        (q ** -1).evaluate(0)


def test_zero_is_empty():
    z = q - q
    assert not z and z.coeffs == () and z.to_json() == []
    assert LaurentPolynomial([0, 1, 0], -2) == q ** -1


def test_json_round_trip():
    f = Fraction(3, 2) * q ** -2 - q + 7
    assert f.to_json() == [[-2, "3/2"], [0, 7], [1, -1]]
    assert LaurentPolynomial.from_json(f.to_json()) == f


def test_exact_division():
    f = (q ** 3 - 1) * (q + 2)
    assert f.exact_div(q + 2) == q ** 3 - 1
    assert (q ** 2 + 1).exact_div(q - 1) is None
    with pytest.raises(ValueError):
        (q ** 2 + 1) / (q - 1)


@settings(max_examples=80, deadline=None)
@given(laurent, laurent, laurent)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f and f + g == g + f
    assert f - f == LaurentPolynomial()


@settings(max_examples=80, deadline=None)
@given(laurent, laurent)
def test_star_is_ring_automorphism(f, g):
    assert (f * g).star() == f.star() * g.star()
    assert (f + g).star() == f.star() + g.star()
    assert f.star().star() == f


@settings(max_examples=80, deadline=None)
@given(laurent)
def test_qprime_round_trip(f):
    if not f:
        with pytest.raises(ValueError):
            f.qprime_split()
        return
    k, fp = f.qprime_split()
    assert q ** k * fp == f and fp.valuation == 0


# -- rational functions ----------------------------------------------------------
def test_ratfunc_canonical_form():
    a = RationalFunction(q ** 2 - 1, 2 * q - 2)
    assert a == RationalFunction(q + 1, 2)
    assert a + (-a) == as_ratfunc(0)
    assert a.is_laurent() and a.as_laurent() == Fraction(1, 2) * (q + 1)
    b = RationalFunction(q, q ** 2 - 1)
    assert b.den.leading_coefficient() == 1


def test_ratfunc_field_equality_random():
    rng = random.Random(7)

    def poly():
        return LaurentPolynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))], rng.randint(-1, 1))

    for _ in range(1000):
        a, b, c = poly(), poly(), poly()
        if not b or not c:
            continue
        x, y = RationalFunction(a, b), RationalFunction(a * c, b * c)
        assert x == y and repr(x) == repr(y) and hash(x) == hash(y)
        assert x - y == as_ratfunc(0)


def test_ratfunc_star_and_evaluate():
    r = RationalFunction(q, q ** 2 - 1)
    assert r.star() == RationalFunction(q, 1 - q ** 2)
    assert r.evaluate(2) == Fraction(2, 3)


# -- cyclotomics -----------------------------------------------------------------
def test_cyclotomic_basics():
    assert euler_phi(12) == 4
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    i = Cyclotomic.zeta(4)
    assert i * i == -1
    assert conj(i) == Cyclotomic.zeta(4, 3)
    w = Cyclotomic.zeta(3)
    assert 1 + w + w * w == 0
    assert w * conj(w) == 1


def test_cyclotomic_coefficients_in_laurent():
    w = Cyclotomic.zeta(3)
    f = q * w + 1
    assert f.conj() == q * conj(w) + 1
    assert (f * f.conj()).evaluate(1) == 1


# -- kernel backends -------------------------------------------------------------
def test_backend_recorded():
    assert BACKEND in ("cython", "python")


@pytest.mark.skipif(importlib.util.find_spec("greenblocks.exactalg._ckernels") is None,
                    reason="compiled kernels not built")
@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-10 ** 12, 10 ** 12), min_size=1, max_size=12),
       st.lists(st.integers(-50, 50), min_size=1, max_size=6))
def test_backends_agree(a, b):
    from greenblocks.exactalg import _ckernels
    if b[-1] == 0:
        b[-1] = 1
    assert _ckernels.mul(list(a), list(b)) == _pykernels.mul(list(a), list(b))
    assert _ckernels.divmod_(list(a), list(b)) == _pykernels.divmod_(list(a), list(b))
    ab = _pykernels.mul(list(a), list(b))
    assert _ckernels.divexact(ab, list(b)) == _pykernels.divexact(ab, list(b))
    assert _ckernels.gcd(list(a), list(b)) == _pykernels.gcd(list(a), list(b))


def test_pure_python_fallback_selected_by_environment(monkeypatch):
    import greenblocks.exactalg.kernels as k
    monkeypatch.setenv("GREENBLOCKS_PURE_PYTHON", "1")
    try:
        importlib.reload(k)
        assert k.BACKEND == "python" and k.mul is _pykernels.mul
    finally:
        monkeypatch.delenv("GREENBLOCKS_PURE_PYTHON")
        importlib.reload(k)
