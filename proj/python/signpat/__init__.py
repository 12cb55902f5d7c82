"""Sign patterns of real polynomials and the orders of moduli of their roots.

Patterns are strings such as "++--" and orders are strings such as "N<P<N"
or "NPN". Exact rationals cross the boundary as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    SignpatError,
    canonical_order,
    census,
    classify,
    is_canonical,
    rigid,
    sign_counts,
    symbolic_lift,
    verify_proposition,
    verify_theorem,
)

__all__ = [
    "SignpatError",
    "canonical_order",
    "census",
    "classify",
    "is_canonical",
    "moduli_order",
    "orders",
    "pattern_of_poly",
    "poly_from_roots",
    "realize",
    "rigid",
    "sign_counts",
    "st_report",
    "symbolic_lift",
    "verify_proposition",
    "verify_theorem",
    "witness",
]


def _pq(values):
    return [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in values]


def _fractions(texts):
    return [Fraction(t) for t in texts]


def poly_from_roots(roots):
    """Ascending coefficients of the monic polynomial with the given roots."""
    return _fractions(_core.poly_from_roots(_pq(roots)))


def pattern_of_poly(coefficients):
    return _core.pattern_of_poly(_pq(coefficients))


def moduli_order(roots):
    return _core.moduli_order(_pq(roots))


def realize(pattern, ratio=Fraction(4)):
    """Roots realizing the pattern with its canonical order of moduli."""
    return _fractions(_core.realize(pattern, _pq([ratio])[0]))


def witness(pattern, order, budget=100000, seed=42):
    found = _core.witness(pattern, order, budget, seed)
    return None if found is None else _fractions(found)


def orders(pattern, budget=100000, seed=42):
    """Report dict; witnesses stay as "p/q" strings."""
    return json.loads(_core.orders_json(pattern, budget, seed))


def st_report(source):
    return json.loads(_core.st_report_json(source))
