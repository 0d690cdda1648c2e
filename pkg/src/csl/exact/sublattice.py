"""Lattices given by basis columns: intersections and indices."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from csl.errors import NotCommensurate, NotSublattice, RankDeficient
from csl.exact.matrix import Matrix, as_matrix, det, mat_mul, rat_inverse, transpose
from csl.exact.normal_forms import hnf
from csl.exact.quadext import QuadExt


def clear_denominators(m: Matrix) -> tuple[int, Matrix]:
    """Least t > 0 with t*M integral, and that integer matrix."""
    t = lcm(*(Fraction(x).denominator for r in m for x in r))
    return t, tuple(tuple(int(Fraction(x) * t) for x in r) for r in m)


def _rational_entries(m: Matrix) -> Matrix:
    out = []
    for r in m:
        row = []
        for x in r:
            if isinstance(x, QuadExt):
                if not x.is_rational:
                    raise NotCommensurate("change of basis has an irrational entry")
                x = x.a
            row.append(Fraction(x))
        out.append(tuple(row))
    return tuple(out)


def integer_kernel(a: Matrix) -> Matrix:
    """Basis (as rows) of the integer solutions x of a @ x = 0."""
    h, u = hnf(transpose(a), allow_rank_deficient=True)
    return tuple(ur for hr, ur in zip(h, u) if not any(hr))


def coordinate_intersection(m: Matrix) -> Matrix:
    """Basis columns of Z^d ∩ M Z^d for a rational nonsingular M."""
    d = len(m)
    t, n = clear_denominators(m)
    # x = M y  <=>  t x - N y = 0
    stacked = tuple(
        tuple(t if j == i else 0 for j in range(d)) + tuple(-v for v in n[i])
        for i in range(d)
    )
    kernel = integer_kernel(stacked)
    if len(kernel) != d:
        raise RankDeficient("intersection is not a full-rank lattice")
    # the x-parts are the lattice vectors; HNF on rows gives a canonical basis
    h, _ = hnf(tuple(row[:d] for row in kernel))
    return transpose(h)


def lattice_intersection(b1: Matrix, b2: Matrix) -> Matrix:
    """Basis columns of B1 Z^d ∩ B2 Z^d.

    The intersection is computed in B1-coordinates, where it is
    Z^d ∩ (B1^-1 B2) Z^d, and mapped back through B1.
    """
    b1, b2 = as_matrix(b1), as_matrix(b2)
    if len(b1) != len(b2):
        raise ValueError("lattices of different dimension")
    change = _rational_entries(mat_mul(rat_inverse(b1), b2))
    x = coordinate_intersection(change)
    if all(not isinstance(v, QuadExt) for r in b1 for v in r):
        return mat_mul(tuple(tuple(Fraction(v) for v in r) for r in b1), x)
    return mat_mul(b1, x)


def index_of_sublattice(b: Matrix, c: Matrix) -> int:
    """Group index [B Z^d : C Z^d] for a sublattice C Z^d of B Z^d."""
    change = mat_mul(rat_inverse(as_matrix(b)), as_matrix(c))
    try:
        change = _rational_entries(change)
    except NotCommensurate as exc:
        raise NotSublattice(str(exc)) from exc
    if any(x.denominator != 1 for r in change for x in r):
        raise NotSublattice("change of basis is not integral")
    return abs(int(det(change)))
