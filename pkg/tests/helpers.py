"""Bridges from library output to the sympy oracles."""

import sympy as sp

from oracles import clean, q
from qshrb.scalar import Scalar


def sym(raw_coeff):
    s = Scalar.from_raw(raw_coeff)
    return sp.expand(sum(sp.Rational(c.numerator, c.denominator) * q**e for e, c in s.terms().items()))


def to_sym(raw: dict) -> dict:
    return clean({k: sym(c) for k, c in raw.items()})
