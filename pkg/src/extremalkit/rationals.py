"""Exact rational parsing and formatting."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not weights")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def exact(x):
    """Like :func:`as_rational`, but integral values come back as ``int``."""
    f = as_rational(x)
    return f.numerator if f.denominator == 1 else f


def format_rational(x) -> str:
    f = as_rational(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
