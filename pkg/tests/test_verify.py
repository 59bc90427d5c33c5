import pytest

from greenblocks import verify
from greenblocks.exactalg import LaurentPolynomial

q = LaurentPolynomial.q()


def test_suites_cover_every_criterion():
    covered = {k for name, ks in verify.SUITES.items() if name != "all" for k in ks}
    assert covered == set(verify.CRITERIA) == set(range(1, 12))
    assert verify.SUITES["all"] == tuple(range(1, 12))


def test_suite_params():
    p = verify.suite_params(n=3, q=2)
    assert p["gl_max"] == 3 and p["weyl_rank"] == 3 and p["oracle_max"] == 3
    assert p["oracle_qs"] == (2,) and p["ggg_fields"] == ((2, 2), (3, 2))
    assert verify.suite_params(n=2, q=3)["ggg_fields"] == ((2, 3),)
    assert verify.suite_params(n=8)["orth_max"] == 3
    assert verify.suite_params() == {}
    for bad in ({"n": 0}, {"q": 4}, {"q": 7}):
        with pytest.raises(ValueError):
            verify.suite_params(**bad)


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")


def test_small_suite_runs_green():
    res = verify.run_suite("factorization", **verify.suite_params(n=3))
    assert [r.number for r in res] == [1, 4] and all(r.ok and r.checked for r in res)


def test_zero_checks_is_a_failure():
    r = verify.run_criterion(9, subregular_max=1)
    assert not r.ok and r.failures[0]["locus"] == "criterion"


def test_exception_becomes_failure_locus(monkeypatch):
    def boom(*a, **k):
        raise RuntimeError("injected")

    monkeypatch.setattr(verify, "factorize", boom)
    r = verify.run_criterion(1, gl_max=2, sl_max=2)
    assert not r.ok
    assert r.failures[0]["locus"] == "GL1" and "injected" in r.failures[0]["detail"]


# each criterion must notice a corrupted ingredient
def test_criterion_3_detects_shifted_kostka(monkeypatch):
    real = verify.kostka_foulkes
    monkeypatch.setattr(verify, "kostka_foulkes", lambda lam, mu: {e + 1: c for e, c in real(lam, mu).items()})
    assert not verify.run_criterion(3, kf_max=2).ok


def test_criterion_8_detects_wrong_regular_coefficient(monkeypatch):
    real = verify.restrict_ggg
    monkeypatch.setattr(verify, "restrict_ggg", lambda e, i, *a: {k: v * q for k, v in real(e, i, *a).items()})
    assert not verify.run_criterion(8, regular_max=2).ok


def test_criterion_9_detects_closed_form_mismatch(monkeypatch):
    real = verify.subregular_restriction
    monkeypatch.setattr(verify, "subregular_restriction",
                        lambda e: {k: v + q ** -1 for k, v in real(e).items()})
    assert not verify.run_criterion(9, subregular_max=3).ok


def test_criterion_10_detects_oracle_disagreement(monkeypatch):
    real = verify.induced_ggg
    monkeypatch.setattr(verify, "induced_ggg", lambda n, p, lam: {k: v + 1 for k, v in real(n, p, lam).items()})
    assert not verify.run_criterion(10, ggg_fields=((2, 2),), orth_max=1).ok


def test_result_json():
    r = verify.run_criterion(8, regular_max=2)
    d = r.to_json()
    assert d["criterion"] == 8 and d["ok"] is True and d["checked"] == r.checked
