"""Lusztig's algorithm: the matrices Omega and Xi of a block and their factorization.

Everything here is normalized by the order of the connected centre of G:
Omega_{i,k} = <Zbar phi_i, phi_k> with Zbar(w) = det(qI - M(w)) on the
l-dimensional reflection module, Xi = Omega^-1, and

    Xi = transpose(P) Lambda P,    Omega = P^-1 Lambda^-1 transpose(P)^-1,

with P upper unitriangular (identity blocks on equal-support groups) and
Lambda block diagonal.  The group-level Lambda is Lambda / (q-1)^central_rank.

>>> from greenblocks.blocks import gl_principal_block
>>> t = factorize(gl_principal_block(2))
>>> t.omega
[[q, -1], [-1, q]]
>>> t.ptilde
[[1, q^-1], [0, 1]]
>>> t.lam[0][0], t.lam[1][1]
(q/(q^2 - 1), q^-1)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce

from ..blocks import BlockDescriptor
from ..exactalg import LaurentPolynomial, Q, RationalFunction, as_ratfunc
from ..exactalg import kernels
from ..exactalg.matrix import adjugate, det
from ..weyl import ClassFunction, exterior_reflection_characters

__all__ = ["GreenTable", "omega_matrix", "omega_matrix_exterior", "xi_matrix", "xi_numerators",
           "factorize", "FactorizationError"]

ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
RZERO = RationalFunction(0)


class FactorizationError(ArithmeticError):
    """Singular pivot block or a non-polynomial entry of P."""


def _char_rows(b: BlockDescriptor):
    W = b.W
    return [W.table[j] for j in b.phi_index]


def _weighted_gram(rows, weights, order):
    """sum_w weights[w] rows_i(w) rows_k(w) / order, as an exact matrix (rational rows)."""
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ri = rows[i]
        wi = [x * y for x, y in zip(ri, weights)]
        for k in range(i, n):
            s = sum(x * y for x, y in zip(wi, rows[k]))
            v = Fraction(s, order) if type(s) is int else Fraction(s) / order
            v = v.numerator if v.denominator == 1 else v
            out[i][k] = out[k][i] = v
    return out


def omega_matrix(b: BlockDescriptor) -> list:
    """Omega_1 = <Zbar phi_i, phi_k>, assembled coefficient by coefficient in q."""
    W = b.W
    rows = _char_rows(b)
    polys = W.charpolys
    l = W.rank
    n = len(rows)
    coeff_mats = []
    for e in range(l + 1):
        weights = [size * p[e] for size, p in zip(W.class_sizes, polys)]
        coeff_mats.append(_weighted_gram(rows, weights, W.order))
    return [[LaurentPolynomial([coeff_mats[e][i][k] for e in range(l + 1)])
             for k in range(n)] for i in range(n)]


def omega_matrix_exterior(b: BlockDescriptor) -> list:
    """The same matrix via sum_i q^(l-i) (-1)^i <phi_i phi_k, wedge^i r>."""
    W = b.W
    rows = _char_rows(b)
    l = W.rank
    ext = exterior_reflection_characters(W)
    n = len(rows)
    out = [[ZERO] * n for _ in range(n)]
    for i, f in enumerate(ext):
        weights = [size * v for size, v in zip(W.class_sizes, f.values)]
        m = _weighted_gram(rows, weights, W.order)
        mono = Q ** (l - i) * (-1) ** i
        for a in range(n):
            for c in range(n):
                if m[a][c]:
                    out[a][c] = out[a][c] + mono * m[a][c]
    return out


def _lcm(polys):
    def lcm2(a, b):
        g = kernels.gcd(list(a), list(b))
        return kernels.mul(list(a), kernels.divexact(list(b), g))
    return reduce(lcm2, polys)


def xi_numerators(b: BlockDescriptor):
    """(N, D) with Xi = N / D: D = |W| lcm_w Zbar(w) and N a matrix of polynomials."""
    W = b.W
    rows = _char_rows(b)
    polys = W.charpolys
    lcm = LaurentPolynomial(_lcm([list(p.coeffs) for p in polys]))
    n = len(rows)
    quotients = [lcm.exact_div(p) for p in polys]
    top = max(len(qq.coeffs) for qq in quotients)
    mats = []
    for e in range(top):
        weights = [size * qq[e] for size, qq in zip(W.class_sizes, quotients)]
        mats.append(_weighted_gram(rows, weights, 1))
    num = [[LaurentPolynomial([mats[e][i][k] for e in range(top)]) for k in range(n)] for i in range(n)]
    return num, lcm * W.order


def xi_matrix(b: BlockDescriptor, check: bool = True) -> list:
    """Xi = <Zbar^-1 phi_i, phi_k>; with ``check`` the identity Omega Xi = 1 is asserted."""
    num, den = xi_numerators(b)
    if check:
        _assert_inverse(omega_matrix(b), num, den)
    return [[RationalFunction(x, den) for x in row] for row in num]


def _assert_inverse(omega, num, den):
    n = len(omega)
    for i in range(n):
        for k in range(n):
            acc = ZERO
            for j in range(n):
                if omega[i][j] and num[j][k]:
                    acc = acc + omega[i][j] * num[j][k]
            if acc != (den if i == k else ZERO):
                raise AssertionError(f"Omega * Xi != 1 at ({i}, {k})")


def _invert_block(m):
    if len(m) == 1:
        return [[m[0][0].inverse()]]
    d = det(m, RZERO)
    if not d:
        raise FactorizationError("singular pivot block")
    inv_d = d.inverse()
    return [[x * inv_d for x in row] for row in adjugate(m, RZERO)]


def _eliminate_omega(b: BlockDescriptor, omega):
    """Omega = U D U^T with U upper block-unitriangular: sweep groups from the last."""
    n = len(omega)
    a = [[as_ratfunc(x) for x in row] for row in omega]
    U = [[RationalFunction(1) if i == k else RZERO for k in range(n)] for i in range(n)]
    D = [[RZERO] * n for _ in range(n)]
    for grp in reversed(b.groups):
        g = list(grp)
        piv = [[a[i][k] for k in g] for i in g]
        for x, i in enumerate(g):
            for y, k in enumerate(g):
                D[i][k] = piv[x][y]
        inv = _invert_block(piv)
        above = range(g[0])
        # U[i][g] = a[i][g] piv^-1 for i above the group
        for i in above:
            row = [a[i][k] for k in g]
            if not any(row):
                continue
            coeffs = [sum((row[x] * inv[x][y] for x in range(len(g)) if row[x] and inv[x][y]), RZERO)
                      for y in range(len(g))]
            for y, k in enumerate(g):
                U[i][k] = coeffs[y]
        # Schur complement on the leading part
        for i in above:
            ui = [U[i][k] for k in g]
            if not any(ui):
                continue
            for j in range(i, g[0]):
                aj = [a[j][k] for k in g]
                s = sum((u * x for u, x in zip(ui, aj) if u and x), RZERO)
                if s:
                    a[i][j] = a[i][j] - s
                    if j != i:
                        a[j][i] = a[i][j]
    return U, D


def _eliminate_xi(b: BlockDescriptor, xi):
    """Xi = P^T Lambda P with P upper block-unitriangular: sweep groups from the first."""
    n = len(xi)
    a = [list(row) for row in xi]
    P = [[RationalFunction(1) if i == k else RZERO for k in range(n)] for i in range(n)]
    L = [[RZERO] * n for _ in range(n)]
    for grp in b.groups:
        g = list(grp)
        piv = [[a[i][k] for k in g] for i in g]
        for x, i in enumerate(g):
            for y, k in enumerate(g):
                L[i][k] = piv[x][y]
        inv = _invert_block(piv)
        below = range(g[-1] + 1, n)
        for k in below:
            col = [a[i][k] for i in g]
            if not any(col):
                continue
            for x, i in enumerate(g):
                P[i][k] = sum((inv[x][y] * col[y] for y in range(len(g)) if inv[x][y] and col[y]), RZERO)
        for j in below:
            pj = [P[i][j] for i in g]
            if not any(pj):
                continue
            for k in range(j, n):
                ak = [a[i][k] for i in g]
                s = sum((u * x for u, x in zip(pj, ak) if u and x), RZERO)
                if s:
                    a[j][k] = a[j][k] - s
                    if k != j:
                        a[k][j] = a[j][k]
    return P, L


def _to_laurent(m, what):
    out = []
    for i, row in enumerate(m):
        new = []
        for k, x in enumerate(row):
            if not x.is_laurent():
                raise FactorizationError(f"{what}[{i}][{k}] = {x} is not a Laurent polynomial")
            new.append(x.num)
        out.append(new)
    return out


def _unitriangular_inverse(U):
    """Inverse of an upper unitriangular matrix of Laurent polynomials, by back substitution."""
    n = len(U)
    inv = [[ONE if i == k else ZERO for k in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(k - 1, -1, -1):
            acc = ZERO
            for j in range(i + 1, k + 1):
                if U[i][j] and inv[j][k]:
                    acc = acc + U[i][j] * inv[j][k]
            inv[i][k] = -acc
    return inv


@dataclass(eq=False)
class GreenTable:
    """Output of the algorithm for one block (normalized; see the module docstring)."""
    block: BlockDescriptor
    omega: list                  # Laurent polynomials
    xi_num: list                 # Xi = xi_num / xi_den
    xi_den: LaurentPolynomial
    ptilde: list                 # Laurent polynomials, upper unitriangular
    pinv: list                   # ptilde^-1
    lam: list                    # normalized Lambda, rational functions, block diagonal
    lam_inv: list                # its inverse, block diagonal
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.ptilde)

    @cached_property
    def xi(self) -> list:
        return [[RationalFunction(x, self.xi_den) for x in row] for row in self.xi_num]

    @cached_property
    def center_order(self) -> LaurentPolynomial:
        """|Z_G^0F| = (q-1)^central_rank, the factor dropped by the normalization."""
        return (Q - 1) ** self.block.central_rank

    @cached_property
    def lam_group(self) -> list:
        """The group-level Lambda: Gram matrix of the Y~ basis over G^F."""
        z = as_ratfunc(self.center_order)
        return [[x / z if x else RZERO for x in row] for row in self.lam]

    @cached_property
    def qtilde(self) -> list:
        """Q~_i(w) = sum_g phi_g(w) P[i][g], one Laurent-valued class function per pair."""
        W = self.block.W
        rows = _char_rows(self.block)
        out = []
        for i in range(self.size):
            vals = []
            for c in range(W.num_classes):
                acc = ZERO
                for g, p in enumerate(self.ptilde[i]):
                    if p and rows[g][c]:
                        acc = acc + p * rows[g][c]
                vals.append(acc)
            out.append(ClassFunction(W, vals))
        return out

    @cached_property
    def phis(self) -> list:
        W = self.block.W
        return [ClassFunction(W, row) for row in _char_rows(self.block)]

    def unnormalized_p(self, k, i) -> LaurentPolynomial:
        """P_{k,i} = q^(c_k - c_i) P~_{k,i}, so that X~_i = sum_k P~_{k,i} Y~_k."""
        shift = self.block.pairs[k].c - self.block.pairs[i].c
        if isinstance(shift, Fraction):
            if shift.denominator != 1:
                raise ValueError("non-integral c difference")
            shift = shift.numerator
        return self.ptilde[k][i].shift(shift)


def factorize(b: BlockDescriptor, route: str = "omega", check: bool = True) -> GreenTable:
    """Run the algorithm on a block.

    ``route="omega"`` eliminates on Omega from the last support group down
    (P^-1 is produced directly and inverted by back substitution);
    ``route="xi"`` eliminates on Xi from the first group up.  With ``check``
    the reconstruction Xi = P^T Lambda P and the vanishing pattern are
    asserted.
    """
    omega = omega_matrix(b)
    num, den = xi_numerators(b)
    if check:
        _assert_inverse(omega, num, den)
    if route == "omega":
        U, D = _eliminate_omega(b, omega)
        pinv = _to_laurent(U, "P^-1")
        ptilde = _unitriangular_inverse(pinv)
        lam_inv = D
        lam = _invert_groups(b, D)
    elif route == "xi":
        xi = [[RationalFunction(x, den) for x in row] for row in num]
        P, lam = _eliminate_xi(b, xi)
        ptilde = _to_laurent(P, "P")
        pinv = _unitriangular_inverse(ptilde)
        lam_inv = _invert_groups(b, lam)
    else:
        raise ValueError(f"unknown route {route!r}")
    table = GreenTable(b, omega, num, den, ptilde, pinv, lam, lam_inv, meta={"route": route})
    if check:
        check_pattern(table)
        check_reconstruction(table)
    return table


def _invert_groups(b, m):
    n = len(m)
    out = [[RZERO] * n for _ in range(n)]
    for grp in b.groups:
        g = list(grp)
        inv = _invert_block([[m[i][k] for k in g] for i in g])
        for x, i in enumerate(g):
            for y, k in enumerate(g):
                out[i][k] = inv[x][y]
    return out


def check_pattern(t: GreenTable) -> None:
    """P is unitriangular with identity diagonal blocks and P[k][i] = 0 unless C_k <= closure(C_i)."""
    b = t.block
    grp_of = {}
    for gi, grp in enumerate(b.groups):
        for i in grp:
            grp_of[i] = gi
    for k, row in enumerate(t.ptilde):
        for i, x in enumerate(row):
            same = grp_of[i] == grp_of[k]
            if same and x != (ONE if i == k else ZERO):
                raise AssertionError(f"P[{k}][{i}] breaks the identity diagonal block")
            if not same and x and (i < k or not b.support_le(b.pairs[k].support, b.pairs[i].support)):
                raise AssertionError(f"P[{k}][{i}] = {x} violates the closure-order vanishing pattern")
    for i, row in enumerate(t.lam):
        for k, x in enumerate(row):
            if x and grp_of[i] != grp_of[k]:
                raise AssertionError("Lambda is not block diagonal")
            if x != t.lam[k][i]:
                raise AssertionError("Lambda is not symmetric")


def check_reconstruction(t: GreenTable) -> None:
    """transpose(P) Lambda P = Xi, checked on numerators over the common denominator of Xi."""
    n = t.size
    den = t.xi_den
    # den * Lambda has polynomial entries because Lambda = P^-T Xi P^-1
    scaled = [[ZERO] * n for _ in range(n)]
    for grp in t.block.groups:
        for i in grp:
            for k in grp:
                x = t.lam[i][k]
                if x:
                    y = den * x
                    if not y.is_laurent():
                        raise AssertionError(f"Lambda[{i}][{k}] has a denominator outside Xi's")
                    scaled[i][k] = y.num
    # M = scaled * P, then P^T M
    m = [[ZERO] * n for _ in range(n)]
    for grp in t.block.groups:
        for i in grp:
            for k in range(n):
                acc = ZERO
                for j in grp:
                    if scaled[i][j] and t.ptilde[j][k]:
                        acc = acc + scaled[i][j] * t.ptilde[j][k]
                m[i][k] = acc
    for i in range(n):
        for k in range(i, n):
            acc = ZERO
            for j in range(n):
                if t.ptilde[j][i] and m[j][k]:
                    acc = acc + t.ptilde[j][i] * m[j][k]
            if acc != t.xi_num[i][k]:
                raise AssertionError(f"transpose(P) Lambda P != Xi at ({i}, {k})")
