"""Exact algebra for exceptional specializations of P(T, X) over Q.

Polynomials are strings in the grammar of the command-line tool, e.g.
"3*X^4 - 4*X^3 + 1 + 3*T^2". Rationals come back as fractions.Fraction.
"""

import json
import os
from fractions import Fraction

from . import _hitbox
from ._hitbox import DomainError, ParseError, ResourceError, ValidationError

__all__ = [
    "DomainError",
    "ParseError",
    "ResourceError",
    "ValidationError",
    "conic_solvable",
    "discriminant",
    "enumerate_exceptional",
    "exclusion_set",
    "factor",
    "fixture",
    "fixture_path",
    "galois",
    "hilbert_symbol",
    "rational_roots",
    "torsion",
    "transitive_table",
    "verify",
]

_FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def _q(value):
    return str(Fraction(value)) if not isinstance(value, str) else value


def fixture_path(name):
    """Path of a fixture file, or of a bundled fixture given by name."""
    if os.path.isfile(name):
        return name
    bundled = os.path.join(_FIXTURES, name + ".json")
    if os.path.isfile(bundled):
        return bundled
    raise ValidationError(name + ": fixture not found")


def factor(poly):
    out = json.loads(_hitbox.factor_json(poly))
    out["unit"] = Fraction(out["unit"])
    return out


def rational_roots(poly):
    return [Fraction(r) for r in _hitbox.rational_roots(poly)]


def galois(poly, budget=60):
    return json.loads(_hitbox.galois_json(poly, budget))


def discriminant(poly):
    """Rational discriminant, or disc_X as a polynomial string in T."""
    text = _hitbox.discriminant(poly)
    return text if "T" in text else Fraction(text)


def exclusion_set(P, S):
    return {Fraction(t) for t in _hitbox.exclusion_set(P, list(S))}


def fixture(name):
    return json.loads(_hitbox.fixture_json(fixture_path(name)))


def verify(name, height, budget=60, implication=False):
    return json.loads(_hitbox.verify_json(fixture_path(name), height, budget, implication))


def enumerate_exceptional(name, height):
    return json.loads(_hitbox.enumerate_json(fixture_path(name), height))


def hilbert_symbol(a, b, place):
    return _hitbox.hilbert_symbol(_q(a), _q(b), str(place))


def conic_solvable(a, b, c, place=None):
    """y^2 = a x^2 + b x + c over Q, or over the completion at place."""
    return _hitbox.conic_solvable(_q(a), _q(b), _q(c), "" if place is None else str(place))


def torsion(a4, a6):
    rows = json.loads(_hitbox.torsion_json(_q(a4), _q(a6)))
    return [
        (None if r["point"] is None else tuple(Fraction(c) for c in r["point"]), r["order"]) for r in rows
    ]


def transitive_table(degree):
    return json.loads(_hitbox.transitive_table_json(degree))
