"""JSON encoding of exact scalars.

Rationals are written as ints or "p/q" strings, cyclotomic numbers as
``{"conductor": N, "coeffs": [...]}`` in the reduced power basis.
"""
from fractions import Fraction

from .cyclotomic import Cyclotomic

__all__ = ["scalar_to_json", "scalar_from_json", "parse_rational"]


def scalar_to_json(c):
    if isinstance(c, Cyclotomic):
        return c.to_json()
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def parse_rational(text):
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def scalar_from_json(data):
    if isinstance(data, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(data, int):
        return data
    if isinstance(data, str):
        return parse_rational(data)
    if isinstance(data, dict):
        return Cyclotomic([parse_rational(str(c)) for c in data["coeffs"]], data["conductor"])
    raise TypeError(f"cannot decode scalar from {data!r}")
