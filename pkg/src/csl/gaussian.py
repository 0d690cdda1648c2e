"""Gaussian integers and the coincidence/similarity rotations of Z^2 = Z[i].

Irrational magnitudes such as sqrt(2) or sqrt(p) are never evaluated. A
similarity direction z/|z| is carried as exponent data only, and compared
through exact identities such as (z/|z|)^2 = z/conj(z).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, isqrt, prod

from sympy import factorint, isprime, primerange

from csl.errors import BothZero, NotSplitPrime, NotUnitModulus, ParseError, ZeroInput
from csl.lattice import CoincidenceMap, square_lattice, validate_similarity


@dataclass(frozen=True, order=True)
class GaussInt:
    re: int
    im: int = 0

    def __add__(self, other: GaussInt | int) -> GaussInt:
        o = _g(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        o = _g(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: GaussInt | int) -> GaussInt:
        return _g(other) - self

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        o = _g(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussInt:
        if k < 0:
            raise ValueError("negative power of a Gaussian integer")
        out = GaussInt(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divmod(self, other: GaussInt | int) -> tuple[GaussInt, GaussInt]:
        """Euclidean division with the quotient rounded to the nearest lattice point."""
        o = _g(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        num = self * o.conjugate()
        q = GaussInt(_round_div(num.re, n), _round_div(num.im, n))
        return q, self - q * o

    def exact_div(self, other: GaussInt | int) -> GaussInt:
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __str__(self) -> str:
        return format_gauss(self)


def _g(x: GaussInt | int) -> GaussInt:
    return x if isinstance(x, GaussInt) else GaussInt(int(x))


def _round_div(a: int, b: int) -> int:
    return (2 * a + b) // (2 * b)


UNITS = (GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1))
ONE_PLUS_I = GaussInt(1, 1)


def gauss_norm(z: GaussInt) -> int:
    return z.norm()


def canonical_associate(z: GaussInt) -> GaussInt:
    """The associate of z with re > 0 and im >= 0 (zero maps to zero)."""
    if not z:
        return z
    for u in UNITS:
        w = z * u
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("unreachable")


def gauss_gcd(z: GaussInt, w: GaussInt) -> GaussInt:
    if not z and not w:
        raise BothZero("gcd(0, 0) is undefined")
    while w:
        z, w = w, z.divmod(w)[1]
    return canonical_associate(z)


def find_split_prime(p: int) -> GaussInt:
    """The canonical factor a+bi of p = a^2 + b^2 with a > b > 0."""
    if p % 4 != 1 or not isprime(p):
        raise NotSplitPrime(f"{p} is not a prime congruent to 1 mod 4")
    for b in range(1, isqrt(p // 2) + 1):
        a = isqrt(p - b * b)
        if a * a + b * b == p:
            return GaussInt(a, b)
    raise AssertionError("Fermat's two-square theorem failed")


@dataclass(frozen=True)
class GaussFactorization:
    """z = i^unit_exp (1+i)^exp_1plusi prod w_p^a_p conj(w_p)^b_p prod q^c_q."""

    unit_exp: int
    exp_1plusi: int
    split: dict[int, tuple[int, int]] = field(default_factory=dict)
    inert: dict[int, int] = field(default_factory=dict)

    def reconstruct(self) -> GaussInt:
        z = UNITS[self.unit_exp % 4] * ONE_PLUS_I ** self.exp_1plusi
        for p, (a, b) in self.split.items():
            w = find_split_prime(p)
            z = z * w ** a * w.conjugate() ** b
        for q, c in self.inert.items():
            z = z * q ** c
        return z


def _strip(z: GaussInt, f: GaussInt) -> tuple[GaussInt, int]:
    k = 0
    while True:
        q, r = z.divmod(f)
        if r:
            return z, k
        z, k = q, k + 1


def gauss_factor(z: GaussInt) -> GaussFactorization:
    if not z:
        raise ZeroInput("cannot factor zero")
    e = 0
    split: dict[int, tuple[int, int]] = {}
    inert: dict[int, int] = {}
    for p in sorted(factorint(z.norm())):
        if p == 2:
            z, e = _strip(z, ONE_PLUS_I)
        elif p % 4 == 3:
            z, c = _strip(z, GaussInt(p))
            inert[p] = c
        else:
            w = find_split_prime(p)
            z, a = _strip(z, w)
            z, b = _strip(z, w.conjugate())
            split[p] = (a, b)
    return GaussFactorization(UNITS.index(z), e, split, inert)


@dataclass(frozen=True)
class GaussRational:
    """numerator / denominator in Q(i), with no rational prime dividing both."""

    numerator: GaussInt
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = self.numerator, self.denominator
        g = gcd(num.re, num.im, den)
        if den < 0:
            g = -g
        object.__setattr__(self, "numerator", GaussInt(num.re // g, num.im // g))
        object.__setattr__(self, "denominator", den // g)

    @property
    def is_unit_modulus(self) -> bool:
        return self.numerator.norm() == self.denominator ** 2

    @property
    def real(self) -> Fraction:
        return Fraction(self.numerator.re, self.denominator)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.numerator.im, self.denominator)

    def __mul__(self, other: GaussRational) -> GaussRational:
        return GaussRational(self.numerator * other.numerator, self.denominator * other.denominator)

    def conjugate(self) -> GaussRational:
        return GaussRational(self.numerator.conjugate(), self.denominator)

    def inverse(self) -> GaussRational:
        # 1/(z/d) = d conj(z) / N(z)
        if not self.numerator:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.numerator.conjugate() * self.denominator, self.numerator.norm())

    def __truediv__(self, other: GaussRational) -> GaussRational:
        return self * other.inverse()

    def __pow__(self, k: int) -> GaussRational:
        base = self if k >= 0 else self.inverse()
        out = GaussRational(GaussInt(1))
        for _ in range(abs(k)):
            out = out * base
        return out

    def __str__(self) -> str:
        if self.denominator == 1:
            return format_gauss(self.numerator)
        if self.numerator.im == 0:
            return f"{self.numerator.re}/{self.denominator}"
        return f"({format_gauss(self.numerator)})/{self.denominator}"


def direction_square(z: GaussInt) -> GaussRational:
    """(z/|z|)^2 = z / conj(z), the coincidence rotation attached to z."""
    if not z:
        raise ZeroInput("zero has no direction")
    return GaussRational(z * z, z.norm())


@dataclass(frozen=True)
class SocFactorization:
    """i^unit_exp * prod (w_p / conj w_p)^n_p over split primes p."""

    unit_exp: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "unit_exp", self.unit_exp % 4)
        object.__setattr__(self, "factors", {p: n for p, n in sorted(self.factors.items()) if n})

    def __hash__(self) -> int:
        return hash((self.unit_exp, tuple(self.factors.items())))

    def reconstruct(self) -> GaussRational:
        q = GaussRational(UNITS[self.unit_exp])
        for p, n in self.factors.items():
            w = find_split_prime(p)
            q = q * GaussRational(w * w, p) ** n
        return q

    def __mul__(self, other: SocFactorization) -> SocFactorization:
        keys = set(self.factors) | set(other.factors)
        return SocFactorization(
            self.unit_exp + other.unit_exp,
            {p: self.factors.get(p, 0) + other.factors.get(p, 0) for p in keys},
        )

    def sort_key(self) -> tuple:
        return (coincidence_index_z2(self), tuple(self.factors.items()), self.unit_exp)


@dataclass(frozen=True)
class SosFactorization:
    """((1+i)/sqrt 2)^eighth_exp * prod (w_p / sqrt p)^l_p over split primes p."""

    eighth_exp: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "eighth_exp", self.eighth_exp % 8)
        object.__setattr__(self, "factors", {p: n for p, n in sorted(self.factors.items()) if n})

    def __hash__(self) -> int:
        return hash((self.eighth_exp, tuple(self.factors.items())))

    def representative(self) -> GaussInt:
        """A Gaussian integer pointing in the encoded direction."""
        z = ONE_PLUS_I ** self.eighth_exp
        for p, n in self.factors.items():
            w = find_split_prime(p)
            z = z * (w if n > 0 else w.conjugate()) ** abs(n)
        return z


def soc_factorize(q: GaussRational) -> SocFactorization:
    """Unique factorisation of a unit-modulus element of Q(i)."""
    if not q.is_unit_modulus:
        raise NotUnitModulus(f"|{q}| != 1")
    num = gauss_factor(q.numerator)
    # 2 = i^3 (1+i)^2, p = w conj(w), q stays prime: account for the denominator
    unit = num.unit_exp
    exps = {p: a for p, (a, _) in num.split.items()}
    for p, f in factorint(q.denominator).items():
        if p == 2:
            unit -= 3 * f
        elif p % 4 == 1:
            exps[p] = exps.get(p, 0) - f
    return SocFactorization(unit, exps)


def sos_decompose(z: GaussInt) -> SosFactorization:
    """Exponent data of the direction z/|z|."""
    if not z:
        raise ZeroInput("zero has no direction")
    f = gauss_factor(z)
    return SosFactorization(
        f.exp_1plusi + 2 * f.unit_exp,
        {p: a - b for p, (a, b) in f.split.items()},
    )


def same_direction(z: GaussInt, w: GaussInt) -> bool:
    """z/|z| == w/|w|, decided exactly: z * conj(w) is a positive real."""
    if not z or not w:
        raise ZeroInput("zero has no direction")
    c = z * w.conjugate()
    return c.im == 0 and c.re > 0


def sos_square_to_soc(s: SosFactorization) -> SocFactorization:
    # ((1+i)/sqrt 2)^2 = i and (w_p/sqrt p)^2 = w_p/conj(w_p)
    return SocFactorization(s.eighth_exp, dict(s.factors))


def soc_matrix(q: GaussRational) -> CoincidenceMap:
    if not q.is_unit_modulus:
        raise NotUnitModulus(f"|{q}| != 1")
    x, y = q.real, q.imag
    return validate_similarity(square_lattice(2), ((x, -y), (y, x)))


def gauss_matrix(z: GaussInt) -> tuple[tuple[int, int], tuple[int, int]]:
    """Multiplication by z on Z^2; a similarity with multiplier N(z)."""
    return ((z.re, -z.im), (z.im, z.re))


def coincidence_index_z2(f: SocFactorization) -> int:
    return prod(p ** abs(n) for p, n in f.factors.items())


def enumerate_soc_z2(max_index: int) -> list[SocFactorization]:
    """All coincidence rotations of Z^2 with index at most ``max_index``.

    Ordered by index, then by the sorted (p, n_p) pairs, then by unit.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    primes = [p for p in primerange(5, max_index + 1) if p % 4 == 1]
    patterns: list[dict[int, int]] = []

    def extend(i: int, budget: int, current: dict[int, int]) -> None:
        if i == len(primes):
            patterns.append(dict(current))
            return
        p = primes[i]
        extend(i + 1, budget, current)
        k, pk = 1, p
        while pk <= budget:
            for n in (k, -k):
                current[p] = n
                extend(i + 1, budget // pk, current)
            del current[p]
            k, pk = k + 1, pk * p

    extend(0, max_index, {})
    out = [SocFactorization(u, pat) for pat, u in product(patterns, range(4))]
    return sorted(out, key=SocFactorization.sort_key)


_GAUSS_RE = re.compile(r"^(?P<re>[+-]?\d+)(?P<im>[+-]\d*i)?$|^(?P<pure>[+-]?\d*i)$")
_GAUSS_RAT_RE = re.compile(r"^\((?P<num>[^()]+)\)/(?P<den>\d+)$|^(?P<bare>[^()/]+)(?:/(?P<den2>\d+))?$")


def _imag_coeff(text: str) -> int:
    body = text[:-1]
    if body in ("", "+"):
        return 1
    if body == "-":
        return -1
    return int(body)


def parse_gauss(text: str) -> GaussInt:
    """Parse "a+bi", "a-bi", "bi", "a", "i", "-i" (whitespace-insensitive)."""
    m = _GAUSS_RE.match(re.sub(r"\s+", "", text))
    if m is None:
        raise ParseError(f"not a Gaussian integer: {text!r}")
    if m.group("pure") is not None:
        return GaussInt(0, _imag_coeff(m.group("pure")))
    im = m.group("im")
    return GaussInt(int(m.group("re")), _imag_coeff(im) if im else 0)


def parse_gauss_rational(text: str) -> GaussRational:
    """Parse "(a+bi)/c" or a bare Gaussian integer literal, optionally "/c"."""
    s = re.sub(r"\s+", "", text)
    m = _GAUSS_RAT_RE.match(s)
    if m is None:
        raise ParseError(f"not a Gaussian rational: {text!r}")
    num = m.group("num") or m.group("bare")
    den = m.group("den") or m.group("den2") or "1"
    if int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return GaussRational(parse_gauss(num), int(den))


def format_gauss(z: GaussInt) -> str:
    if z.im == 0:
        return str(z.re)
    im = "i" if abs(z.im) == 1 else f"{abs(z.im)}i"
    if z.re == 0:
        return im if z.im > 0 else f"-{im}"
    return f"{z.re}{'+' if z.im > 0 else '-'}{im}"
