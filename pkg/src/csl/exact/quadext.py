"""Elements a + b*sqrt(n) of a real quadratic field Q(sqrt n)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from csl.errors import DivisionByZero, MixedField, ParseError
from csl.exact.rational import format_rational, is_squarefree, parse_rational


@dataclass(frozen=True)
class QuadExt:
    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n < 2 or not is_squarefree(self.n):
            raise ValueError(f"radicand must be a squarefree integer >= 2, got {self.n}")

    @classmethod
    def sqrt(cls, n: int) -> QuadExt:
        return cls(Fraction(0), Fraction(1), n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.n)

    def norm(self) -> Fraction:
        """Field norm (a + b sqrt n)(a - b sqrt n)."""
        return self.a * self.a - self.n * self.b * self.b

    def _coerce(self, other: object) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.n != self.n:
                raise MixedField(f"Q(sqrt {self.n}) vs Q(sqrt {other.n})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt(Fraction(other), Fraction(0), self.n)
        return None

    def __add__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.n)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.a, -self.b, self.n)

    def __sub__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.n)

    def __rsub__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.n * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.n,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        nrm = self.norm()
        # the norm vanishes only at zero since sqrt(n) is irrational
        if nrm == 0:
            raise DivisionByZero("division by zero in Q(sqrt n)")
        return QuadExt(self.a / nrm, -self.b / nrm, self.n)

    def __truediv__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> QuadExt:
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(Fraction(1), Fraction(0), self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.n) == (other.a, other.b, other.n)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __str__(self) -> str:
        return f"{format_rational(self.a)}+{format_rational(self.b)}*sqrt({self.n})"


_QUAD_RE = re.compile(r"^([^*]+?)\s*\+\s*([^*]+?)\s*\*\s*sqrt\s*\(\s*(\d+)\s*\)$")


def parse_quadext(text: str) -> QuadExt:
    """Parse the serialized form ``"a+b*sqrt(n)"``."""
    match = _QUAD_RE.match(text.strip())
    if match is None:
        raise ParseError(f"not a quadratic-field literal: {text!r}")
    a, b, n = match.groups()
    try:
        return QuadExt(parse_rational(a), parse_rational(b), int(n))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
