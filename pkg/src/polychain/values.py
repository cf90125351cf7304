"""Scalar values: exact ``Fraction`` or ``float``.

A whole computation sticks to one of the two.  Ties are exact for fractions and
relative-epsilon for floats.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Value = Union[Fraction, float]

DEFAULT_TIE_EPSILON = 1e-9


def is_exact(v: Value) -> bool:
    return isinstance(v, Fraction)


def parse_fraction(text: str) -> Fraction:
    """Parse ``p/q``, an integer or a finite decimal into a Fraction."""
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed fraction {text!r}") from None
        if q == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    try:
        return Fraction(s)
    except ValueError:
        raise ValueError(f"malformed number {text!r}") from None


def ties(a: Value, b: Value, eps: float = DEFAULT_TIE_EPSILON) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(a - b) <= eps * max(1.0, abs(a))


def total(values: Iterable[Value]) -> Value:
    vals = list(values)
    if vals and all(isinstance(v, Fraction) for v in vals):
        return sum(vals, Fraction(0))
    return math.fsum(float(v) for v in vals)


def format_value(v: Value, force_float: bool = False) -> str:
    """``p/q`` in lowest terms for fractions, 12 significant digits for floats."""
    if isinstance(v, Fraction) and not force_float:
        return str(v)
    return f"{float(v):.12g}"
