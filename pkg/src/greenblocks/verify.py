"""The acceptance checks, grouped into named suites.

Each criterion is a function returning a ``CriterionResult`` with a list of
failure loci; an exception inside a check is reported as a failure at the
locus being checked rather than propagated.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .blocks import gl_principal_block, sl_block
from .exactalg import LaurentPolynomial, as_ratfunc
from .ggg import (GroupType, allorth_expected, allorth_sum, centralizer_sign,
                  gamma_tilde, ggg_orthogonality_u, order_star_identity, zfunction_star_holds)
from .lusztig import (check_pattern, check_reconstruction, duality, duality_y, factorize, green_function,
                      qg_transport, qtilde_gram, scalar_product_green, torus_order)
from .oracle import FiniteMatrixGroup, enumerate_unipotent, induced_ggg, kostka_foulkes
from .restriction.subregular import Qinv, _standard_sigma
from .restriction import (gl_levi_embedding, pipeline_subregular_row, r_matrix, restrict_ggg,
                          restrict_green, restrict_theta, subregular_restriction)
from .weyl import ClassFunction, build_group, fusion_restrict
from .weyl.partitions import n_statistic, parse_partition, partition_label, partitions

__all__ = ["CriterionResult", "CRITERIA", "SUITES", "run_criterion", "run_suite", "suite_params"]

Q1 = LaurentPolynomial.q(1)
ZERO = LaurentPolynomial()


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, locus: str, detail: str = "") -> None:
        self.ok = False
        if len(self.failures) < 50:
            self.failures.append({"locus": locus, "detail": detail})

    def expect(self, cond: bool, locus: str, detail: str = "") -> None:
        self.checked += 1
        if not cond:
            self.fail(locus, detail)

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok, "checked": self.checked,
                "failures": self.failures, "notes": self.notes, "seconds": round(self.seconds, 3)}


def _guard(res: CriterionResult, locus: str, fn) -> None:
    try:
        fn()
    except Exception as exc:  # a crash is a failure at this locus
        res.fail(locus, f"{type(exc).__name__}: {exc}")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _compositions(n):
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for rest in _compositions(n - k):
            yield (k,) + rest


# -- 1 ----------------------------------------------------------------------
def criterion_1(res, gl_max=6, sl_max=8, **_):
    blocks = [gl_principal_block(n) for n in range(1, gl_max + 1)]
    blocks += [sl_block(n, d) for n in range(2, sl_max + 1) for d in _divisors(n)]
    for b in blocks:
        def one(b=b):
            t = factorize(b, check=False)
            check_pattern(t)
            check_reconstruction(t)
            res.checked += 1
        _guard(res, b.name, one)
    res.notes.append(f"{len(blocks)} blocks")


# -- 2 ----------------------------------------------------------------------
def criterion_2(res, sl_max=8, **_):
    for n in range(2, sl_max + 1):
        for d in _divisors(n):
            def one(n=n, d=d):
                ts, tg = factorize(sl_block(n, d)), factorize(gl_principal_block(n // d))
                bs, bg = ts.block, tg.block
                idx = [bg.index(partition_label(tuple(x // d for x in parse_partition(p.id)))) for p in bs.pairs]
                same = all(ts.ptilde[i][k] == tg.ptilde[idx[i]][idx[k]]
                           for i in range(bs.size) for k in range(bs.size))
                res.expect(same and bs.size == bg.size, f"SL{n} d={d}", "P~ differs from GL_{n/d}")
            _guard(res, f"SL{n} d={d}", one)


# -- 3 ----------------------------------------------------------------------
def criterion_3(res, kf_max=5, **_):
    res.notes.append("P_{mu,lam} = q^(n(mu)-n(lam)) K_{lam,mu}(q^-1)")
    for n in range(1, kf_max + 1):
        def one(n=n):
            t = factorize(gl_principal_block(n))
            for k, pk in enumerate(t.block.pairs):
                for i, pi in enumerate(t.block.pairs):
                    mu, lam = parse_partition(pk.id), parse_partition(pi.id)
                    kf = kostka_foulkes(lam, mu)
                    shift = n_statistic(mu) - n_statistic(lam)
                    want = LaurentPolynomial.from_dict({shift - e: c for e, c in kf.items()})
                    got = t.unnormalized_p(k, i)
                    res.expect(got == want, f"GL{n} P[{pk.id}][{pi.id}]", f"{got} != {want}")
        _guard(res, f"GL{n}", one)


# -- 4 ----------------------------------------------------------------------
def criterion_4(res, **_):
    for n in range(1, 5):
        def one(n=n):
            t = factorize(gl_principal_block(n))
            g = green_function(t, t.block.W.identity_class)
            one_label = partition_label((1,) * n)
            want = _gl_qprime(n).exact_div((Q1 - 1) ** n)
            res.expect(g.value(one_label) == want, f"GL{n} Q_1(1)", f"{g.value(one_label)} != {want}")
        _guard(res, f"GL{n} identity", one)
    for n in range(1, 6):
        def two(n=n):
            t = factorize(gl_principal_block(n))
            reg = partition_label((n,))
            for w in t.block.W.class_names:
                v = green_function(t, w).value(reg)
                res.expect(v == LaurentPolynomial.constant(1), f"GL{n} Q_{w}(reg)", str(v))
        _guard(res, f"GL{n} regular", two)


def _gl_qprime(n):
    f = LaurentPolynomial.constant(1)
    for k in range(1, n + 1):
        f = f * (Q1 ** k - 1)
    return f


# -- 5 ----------------------------------------------------------------------
def criterion_5(res, green_max=5, allorth_max=4, oracle_qs=(2, 3, 5), oracle_max=3, **_):
    for n in range(1, green_max + 1):
        def scal(n=n):
            t = factorize(gl_principal_block(n))
            W = t.block.W
            z = torus_order(t)
            for a in range(W.num_classes):
                for b in range(W.num_classes):
                    got = scalar_product_green(t, a, b)
                    want = as_ratfunc(0) if a != b else \
                        as_ratfunc(W.centralizer_order(a)) / as_ratfunc(z.values[a])
                    res.expect(got == want, f"GL{n} <Q_{W.class_names[a]}, Q_{W.class_names[b]}>")
            gram = qtilde_gram(t)
            for i in range(t.size):
                for k in range(t.size):
                    res.expect(as_ratfunc(gram[i][k]) == as_ratfunc(t.lam_inv[i][k]),
                               f"GL{n} Q~-Gram[{i}][{k}]")
        _guard(res, f"GL{n} Green orthogonality", scal)
    for n in range(1, allorth_max + 1):
        def sym(n=n):
            t = factorize(gl_principal_block(n))
            for u in t.block.ids:
                for v in t.block.ids:
                    got, want = allorth_sum([t], u, v), allorth_expected(t.block, u, v)
                    res.expect(got == want, f"GL{n} allorth ({u}, {v})", f"{got} != {want}")
        _guard(res, f"GL{n} allorth", sym)
    for n in range(1, oracle_max + 1):
        t = factorize(gl_principal_block(n))
        for q in oracle_qs:
            def num(n=n, q=q, t=t):
                cls = {c.jordan: c for c in enumerate_unipotent(FiniteMatrixGroup("GL", n, q))}
                for u in t.block.ids:
                    res.expect(cls[u].classes == 1, f"GL{n}(F{q}) class {u} splits")
                    for v in t.block.ids:
                        got = allorth_sum([t], u, v).evaluate(q)
                        want = cls[u].centralizer if u == v else 0
                        res.expect(got == want, f"GL{n}(F{q}) allorth ({u}, {v})", f"{got} != {want}")
            _guard(res, f"GL{n}(F{q}) allorth", num)


# -- 6 ----------------------------------------------------------------------
def criterion_6(res, duality_max=5, **_):
    for n in range(1, duality_max + 1):
        def one(n=n):
            t = factorize(gl_principal_block(n))
            W = t.block.W
            sgn = W.sign()
            for i in range(t.size):
                e = [LaurentPolynomial.constant(1) if k == i else ZERO for k in range(t.size)]
                dd = duality(t, duality(t, e))
                res.expect(dd == e, f"GL{n} D(D(X~_{t.block.ids[i]}))")
                # D corresponds to eta_L sgn on the W side: Q^G(sgn phi_i) = X~_{hat i}
                x, _ = qg_transport(t, sgn * t.phis[i])
                res.expect(x == duality(t, e), f"GL{n} D(X~_{t.block.ids[i]})")
            for c in range(W.num_classes):
                y = list(green_function(t, c).coeffs)
                want = [v * sgn.values[c] for v in y]
                res.expect(duality_y(t, y) == want, f"GL{n} D(Q_{W.class_names[c]})")
        _guard(res, f"GL{n}", one)


# -- 7 ----------------------------------------------------------------------
def _random_theta(W, rng):
    vals = []
    for _ in range(W.num_classes):
        terms = {rng.randint(-2, 3): rng.randint(-4, 4) for _ in range(rng.randint(0, 3))}
        vals.append(LaurentPolynomial.from_dict(terms))
    return ClassFunction(W, vals)


def criterion_7(res, restrict_max=5, samples=20, seed=20240601, **_):
    rng = random.Random(seed)
    for n in range(1, restrict_max + 1):
        for comp in _compositions(n):
            def one(n=n, comp=comp):
                e = gl_levi_embedding(n, comp)
                d = r_matrix(e)
                tG, tM = e.table_g, e.table_m
                for s in range(samples):
                    th = _random_theta(e.ambient.W, rng)
                    _, yG = qg_transport(tG, th)
                    _, yM = qg_transport(tM, fusion_restrict(th, e.embedding))
                    res.expect(restrict_theta(d, yG) == yM, f"{e.label} theta#{s}")
                for c, v in enumerate(e.ambient.W.class_names):
                    y = [ZERO] * tM.size
                    for vp, coef in restrict_green(e, v).items():
                        j = e.sub.W.class_index(vp)
                        y = [a + f.values[j] * coef for a, f in zip(y, tM.qtilde)]
                    via_r = restrict_theta(d, [f.values[c] for f in tG.qtilde])
                    res.expect(y == via_r, f"{e.label} *R Q_{v}")
            _guard(res, f"GL{n} L{comp}", one)


# -- 8 ----------------------------------------------------------------------
def criterion_8(res, regular_max=6, **_):
    for n in range(1, regular_max + 1):
        for comp in _compositions(n):
            def one(n=n, comp=comp):
                e = gl_levi_embedding(n, comp)
                got = restrict_ggg(e, e.ambient.regular_support)
                want = {e.sub.regular_support: LaurentPolynomial.constant(1)}
                res.expect(got == want, e.label, str(got))
            _guard(res, f"GL{n} L{comp}", one)


# -- 9 ----------------------------------------------------------------------
def criterion_9(res, subregular_max=6, **_):
    res.notes.append("P~_{sigma,rho} = q^-1 adopted")
    for n in range(2, subregular_max + 1):
        def coef(n=n):
            e = gl_levi_embedding(n, (n,))
            t, i = e.table_g, _standard_sigma(e)
            rho = t.block.index(t.block.regular_support)
            res.expect(t.ptilde[i][rho] == Qinv, f"GL{n} P~[sigma][rho]", str(t.ptilde[i][rho]))
        _guard(res, f"GL{n} subregular coefficient", coef)
        for k in range(1, n):
            def one(n=n, k=k):
                e = gl_levi_embedding(n, (k, n - k))
                closed, pipe = subregular_restriction(e), pipeline_subregular_row(e)
                res.expect(closed == pipe, e.label, f"closed {closed} vs pipeline {pipe}")
            _guard(res, f"GL{n} L({k},{n - k})", one)


# -- 10 ---------------------------------------------------------------------
def criterion_10(res, ggg_fields=((2, 2), (2, 3), (3, 2)), orth_max=3, **_):
    for n, q in ggg_fields:
        def one(n=n, q=q):
            t = factorize(gl_principal_block(n))
            for lam in t.block.ids:
                oracle = induced_ggg(n, q, lam)
                g = gamma_tilde(t, lam)
                for x in t.block.ids:
                    got = g.value(x).evaluate(q)
                    res.expect(got == oracle[x], f"GL{n}(F{q}) Gamma~_{lam}({x})", f"{got} != {oracle[x]}")
        _guard(res, f"GL{n}(F{q}) Gelfand-Graev", one)
    for n in range(1, orth_max + 1):
        def sym(n=n):
            t = factorize(gl_principal_block(n))
            for u in t.block.ids:
                for v in t.block.ids:
                    lhs, rhs = ggg_orthogonality_u([t], u, v)
                    res.expect(lhs == rhs, f"GL{n} <Gamma_{u}, D Gamma_{v}>", f"{lhs} != {rhs}")
        _guard(res, f"GL{n} orthogonality of Gamma_u", sym)
    for n, q in ggg_fields:
        def num(n=n, q=q):
            cls = {c.jordan: c.centralizer for c in enumerate_unipotent(FiniteMatrixGroup("GL", n, q))}
            t = factorize(gl_principal_block(n))
            for u in t.block.ids:
                lhs, _ = ggg_orthogonality_u([t], u, u)
                c = cls[u]
                while c % q == 0:
                    c //= q
                want = (-1) ** n * centralizer_sign("GL", parse_partition(u)) * c
                res.expect(lhs.evaluate(q) == want, f"GL{n}(F{q}) <Gamma_{u}, D Gamma_{u}>",
                           f"{lhs.evaluate(q)} != {want}")
        _guard(res, f"GL{n}(F{q}) orthogonality vs oracle", num)


# -- 11 ---------------------------------------------------------------------
def criterion_11(res, order_max=4, torus_max=8, weyl_rank=8, **_):
    for n in range(1, order_max + 1):
        res.expect(order_star_identity(GroupType("GL", n)), f"GL{n} order")
    for n in range(1, torus_max + 1):
        for lam in partitions(n):
            h = GroupType.parse("T[" + ",".join(map(str, lam)) + "]")
            res.expect(order_star_identity(h), f"{h} in GL{n}")
    types = [f"A{n}" for n in range(1, weyl_rank + 1)] + [f"B{n}" for n in range(2, weyl_rank + 1)]
    types += [f"D{n}" for n in range(4, weyl_rank + 1)] + ["I2(3)", "I2(4)", "I2(6)"]
    for name in types:
        _guard(res, name, lambda name=name: res.expect(zfunction_star_holds(build_group(name)), f"Z on {name}"))


CRITERIA = {
    1: ("Factorization identity", criterion_1),
    2: ("SL_n blocks reproduce GL_{n/d}", criterion_2),
    3: ("Kostka-Foulkes concordance", criterion_3),
    4: ("Classical Green values", criterion_4),
    5: ("Orthogonality suite", criterion_5),
    6: ("Duality", criterion_6),
    7: ("Restriction commutation", criterion_7),
    8: ("Regular case", criterion_8),
    9: ("Subregular adjudication", criterion_9),
    10: ("Gelfand-Graev ground truth", criterion_10),
    11: ("Star identities", criterion_11),
}

SUITES = {
    "factorization": (1, 4),
    "sln": (2,),
    "orthogonality": (5,),
    "duality": (6,),
    "restriction": (7, 8),
    "ggg": (10, 11),
    "subregular": (9,),
    "oracle": (3, 5, 10),
    "all": tuple(range(1, 12)),
}


_FIELDS = {2: ((2, 2), (3, 2)), 3: ((2, 3), (3, 3)), 5: ((2, 5), (3, 5))}


def suite_params(n: int | None = None, q: int | None = None) -> dict:
    """Criterion bounds from the command-line knobs: n caps every rank sweep, q picks the oracle field."""
    p = {}
    if n is not None:
        if n < 1:
            raise ValueError("n must be positive")
        for key in ("gl_max", "sl_max", "kf_max", "green_max", "allorth_max", "duality_max",
                    "restrict_max", "regular_max", "subregular_max", "order_max", "torus_max", "weyl_rank"):
            p[key] = n
        p["oracle_max"] = p["orth_max"] = min(n, 3)
    if q is not None:
        if q not in _FIELDS:
            raise ValueError(f"oracle fields are F_2, F_3 and F_5, not F_{q}")
        p["oracle_qs"] = (q,)
        p["ggg_fields"] = tuple(f for f in _FIELDS[q] if n is None or f[0] <= n)
    return p


def run_criterion(number: int, **params) -> CriterionResult:
    title, fn = CRITERIA[number]
    res = CriterionResult(number, title)
    t0 = time.perf_counter()
    try:
        fn(res, **params)
    except Exception as exc:
        res.fail("criterion", f"{type(exc).__name__}: {exc}")
    if res.checked == 0 and res.ok:
        res.fail("criterion", "no checks were run")
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(name: str, **params) -> list:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return [run_criterion(k, **params) for k in SUITES[name]]
