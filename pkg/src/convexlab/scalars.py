"""Helpers for the two scalar fields: exact rationals and IEEE doubles."""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

RATIONAL = "rational"
FLOAT = "float"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: silently converting them would smuggle binary
    rounding into the exact field.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact rational")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def format_fraction(value) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_scalar(text, field: str):
    if field == RATIONAL:
        return as_fraction(text)
    return float(text)


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Return the rational square root of ``value`` or None if irrational."""
    q = Fraction(value)
    if q < 0:
        return None
    p, r = q.numerator, q.denominator
    sp, sr = math.isqrt(p), math.isqrt(r)
    if sp * sp == p and sr * sr == r:
        return Fraction(sp, sr)
    return None


def exact_root(value: Fraction, k: int) -> Fraction | None:
    """Rational k-th root of a nonnegative rational, if one exists."""
    q = Fraction(value)
    if q < 0:
        return None
    if k == 1:
        return q
    if k == 2:
        return exact_sqrt(q)

    def iroot(n):
        if n < 2:
            return n
        x = 1 << ((n.bit_length() + k - 1) // k)
        while True:
            y = ((k - 1) * x + n // x ** (k - 1)) // k
            if y >= x:
                break
            x = y
        return x if x**k == n else None

    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def to_float(value) -> float:
    return float(value)
