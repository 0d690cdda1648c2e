"""Exact scalars and integer/rational matrix algebra."""

from csl.exact.matrix import (
    det,
    identity,
    is_integral,
    mat_mul,
    rat_inverse,
    scale,
    to_fractions,
    transpose,
)
from csl.exact.normal_forms import SnfResult, hnf, snf
from csl.exact.quadext import QuadExt
from csl.exact.rational import format_rational, parse_rational
from csl.exact.sublattice import clear_denominators, index_of_sublattice, lattice_intersection

__all__ = [
    "QuadExt",
    "SnfResult",
    "clear_denominators",
    "det",
    "format_rational",
    "hnf",
    "identity",
    "index_of_sublattice",
    "is_integral",
    "lattice_intersection",
    "mat_mul",
    "parse_rational",
    "rat_inverse",
    "scale",
    "snf",
    "to_fractions",
    "transpose",
]
