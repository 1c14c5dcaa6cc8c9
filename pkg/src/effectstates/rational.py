"""Exact rational helpers built on :class:`fractions.Fraction`.

Every number that leaves or enters the package as text uses the reduced
``"p/q"`` form, so ``Fraction(1, 2)`` is written ``"1/2"`` and ``3`` is
written ``"3/1"``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; reject floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal literal {value!r} is not accepted; use 'p/q'")
        return Fraction(text)
    if hasattr(value, "dtype") and getattr(value.dtype, "kind", "") in "iu":
        return Fraction(int(value))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(value: Fraction) -> str:
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return to_fraction(text)


def vec(values: Iterable) -> tuple:
    return tuple(to_fraction(v) for v in values)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def primitive(row: Sequence[Fraction]) -> tuple:
    """Scale ``row`` by a positive factor to coprime integers."""
    row = [to_fraction(x) for x in row]
    if not any(row):
        return tuple(Fraction(0) for _ in row)
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def sign_normalized(row: Sequence[Fraction]) -> tuple:
    """Primitive form with the first nonzero entry positive."""
    prim = primitive(row)
    for x in prim:
        if x:
            return prim if x > 0 else tuple(-y for y in prim)
    return prim
