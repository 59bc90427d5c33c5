"""Exact arithmetic: rationals, cyclotomic numbers, Laurent polynomials in q
and rational functions in q."""
from .cyclotomic import Cyclotomic, conj, cyclotomic_polynomial, euler_phi, is_rational
from .kernels import BACKEND
from .laurent import LaurentPolynomial, PoleError, Q, ZeroBaseError, as_poly
from .ratfunc import RationalFunction, as_ratfunc
from .scalars import parse_rational, scalar_from_json, scalar_to_json

__all__ = [
    "BACKEND", "Cyclotomic", "LaurentPolynomial", "PoleError", "Q", "RationalFunction",
    "ZeroBaseError", "as_poly", "as_ratfunc", "conj", "cyclotomic_polynomial", "euler_phi",
    "evaluate", "is_rational", "parse_rational", "qprime_split", "scalar_from_json",
    "scalar_to_json", "star",
]


def star(f):
    """q -> q^-1 on Laurent polynomials, rational functions and scalars."""
    return f.star() if hasattr(f, "star") else f


def qprime_split(f):
    return as_poly(f).qprime_split()


def evaluate(f, q0):
    return f.evaluate(q0) if hasattr(f, "evaluate") else f
