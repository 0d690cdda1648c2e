"""Rationals are plain :class:`fractions.Fraction` values; this module only
fixes their text form ("p/q", or "p" when q = 1) and a few number-theoretic
helpers used across the package."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from sympy import factorint

from csl.errors import ParseError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"`` or ``"p"``. Ints and Fractions pass through."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"not a rational: {value!r}")
    match = _RATIONAL_RE.match(value)
    if match is None:
        raise ParseError(f"not a rational: {value!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator: {value!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def squarefree_part(n: int) -> int:
    """Return the squarefree kernel s of ``n > 0`` with n = s * k**2."""
    if n <= 0:
        raise ValueError("squarefree_part needs a positive integer")
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return out


@lru_cache(maxsize=1024)
def is_squarefree(n: int) -> bool:
    return n > 0 and all(e == 1 for e in factorint(n).values())


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None
