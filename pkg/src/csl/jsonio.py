"""JSON encodings of lattices, maps, Gaussian data and square classes."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from csl.errors import ParseError
from csl.exact.matrix import Matrix
from csl.exact.rational import format_rational, parse_rational
from csl.factor_group import EtaClass
from csl.gaussian import (
    GaussInt,
    GaussRational,
    SocFactorization,
    SosFactorization,
    parse_gauss,
    parse_gauss_rational,
)
from csl.lattice import Lattice, make_lattice


def matrix_from_json(rows: Any) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise ParseError("matrix must be a non-empty list of non-empty rows")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("matrix rows have different lengths")
    return tuple(tuple(parse_rational(x) for x in r) for r in rows)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(Fraction(x)) for x in r] for r in m]


def lattice_from_json(obj: Any) -> Lattice:
    if not isinstance(obj, dict) or "gram" not in obj:
        raise ParseError('lattice must be an object with a "gram" entry')
    gram = matrix_from_json(obj["gram"])
    if len(gram) != len(gram[0]):
        raise ParseError("Gram matrix must be square")
    if "dim" in obj and obj["dim"] != len(gram):
        raise ParseError(f'"dim" = {obj["dim"]!r} does not match the Gram matrix')
    return make_lattice(gram)


def lattice_to_json(lattice: Lattice) -> dict:
    return {"dim": lattice.dim, "gram": matrix_to_json(lattice.gram)}


def map_from_json(obj: Any) -> tuple[Lattice, Matrix]:
    if not isinstance(obj, dict) or "T" not in obj or "lattice" not in obj:
        raise ParseError('map must be an object with "T" and "lattice" entries')
    return lattice_from_json(obj["lattice"]), matrix_from_json(obj["T"])


def gauss_from_json(obj: Any) -> GaussInt:
    """Accept {"re": "...", "im": "..."}, {"z": "a+bi"} or a bare literal string."""
    if isinstance(obj, str):
        return parse_gauss(obj)
    if isinstance(obj, dict) and "z" in obj:
        return parse_gauss(str(obj["z"]))
    if isinstance(obj, dict) and "re" in obj and "im" in obj:
        try:
            return GaussInt(int(obj["re"]), int(obj["im"]))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad Gaussian integer {obj!r}") from exc
    raise ParseError(f"not a Gaussian integer: {obj!r}")


def gauss_to_json(z: GaussInt) -> dict:
    return {"re": str(z.re), "im": str(z.im)}


def gauss_rational_from_json(obj: Any) -> GaussRational:
    """Accept a literal "(a+bi)/c" or {"q": "(a+bi)/c"}."""
    if isinstance(obj, dict) and "q" in obj:
        obj = obj["q"]
    if not isinstance(obj, str):
        raise ParseError(f"not a Gaussian rational: {obj!r}")
    return parse_gauss_rational(obj)


def _factors_to_json(factors: dict[int, int]) -> dict[str, int]:
    return {str(p): n for p, n in sorted(factors.items())}


def soc_to_json(f: SocFactorization) -> dict:
    return {"unit_exp": f.unit_exp, "factors": _factors_to_json(f.factors)}


def sos_to_json(f: SosFactorization) -> dict:
    return {"eighth_exp": f.eighth_exp, "factors": _factors_to_json(f.factors)}


def soc_from_json(obj: Any) -> SocFactorization:
    try:
        return SocFactorization(int(obj["unit_exp"]), {int(p): int(n) for p, n in obj["factors"].items()})
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"bad SOC factorization {obj!r}") from exc


def eta_to_json(c: EtaClass) -> dict:
    return {"class": c.squarefree_part}
