"""Character sums over finite fields with exact cyclotomic values."""

import json

from . import _fqsum
from ._fqsum import CharacterError, FieldError, UnknownIdentityError, identities

__all__ = [
    "CharacterError",
    "FieldError",
    "UnknownIdentityError",
    "as_integer",
    "binom",
    "f1",
    "f21",
    "field_info",
    "identities",
    "jacobi",
    "verify",
    "verify_all",
]


def _value(text):
    v = json.loads(text)
    v["coeffs"] = [int(c) for c in v["coeffs"]]
    return v


def as_integer(value):
    """The integer a value equals, or None if it is not rational."""
    c = value["coeffs"]
    return (c[0] if c else 0) if all(x == 0 for x in c[1:]) else None


def field_info(q):
    return json.loads(_fqsum.field_info(q))


def jacobi(q, A, B):
    return _value(_fqsum.jacobi(q, A, B))


def binom(q, A, B):
    return _value(_fqsum.binom(q, A, B))


def f21(q, A, B, C, x, form="point"):
    return _value(_fqsum.f21(q, A, B, C, x, form))


def f1(q, A, B, Bp, C, x, y, form="point"):
    return _value(_fqsum.f1(q, A, B, Bp, C, x, y, form))


def verify(id, q, **options):
    return json.loads(_fqsum.verify(id, q, **options))


def verify_all(q, **options):
    return [json.loads(r) for r in _fqsum.verify_all(q, **options)]
