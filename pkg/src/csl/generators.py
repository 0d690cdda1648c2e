"""Seeded random generators of lattices and similarity maps.

Coincidence maps come from the Cayley transform relative to the Gram
matrix G: for skew S, K = G^-1 S is G-skew and (I + K)^-1 (I - K) preserves
G with determinant 1. Genuine similarities (non-square multiplier) come from
multiplication in the planar case, left quaternion multiplication on Z^4,
and block-diagonal complex multiplication on diag(1,1,2,2); they are then
conjugated by random coincidence maps to leave the obvious normal form.
"""

from __future__ import annotations

import random
from fractions import Fraction

from csl.exact.matrix import Matrix, identity, mat_add, mat_mul, mat_sub, rat_inverse, scale
from csl.gaussian import GaussInt
from csl.lattice import (
    Lattice,
    SimilarityMap,
    hexagonal_lattice,
    make_lattice,
    square_lattice,
    validate_similarity,
)

PLANAR_ROTATION = ((0, -1), (1, 0))


def random_rational(rng: random.Random, max_num: int = 6, max_den: int = 4, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_skew(rng: random.Random, d: int, bound: int = 2) -> Matrix:
    s = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            v = Fraction(rng.randint(-bound, bound))
            s[i][j], s[j][i] = v, -v
    return tuple(tuple(r) for r in s)


def random_gram(rng: random.Random, d: int) -> Lattice:
    """A random positive definite integral Gram matrix A^T A + I."""
    a = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
    g = [[sum(a[k][i] * a[k][j] for k in range(d)) + (i == j) for j in range(d)] for i in range(d)]
    return make_lattice(g)


def cayley_map(lattice: Lattice, skew: Matrix) -> SimilarityMap:
    one = identity(lattice.dim, Fraction(1))
    k = mat_mul(rat_inverse(lattice.gram), skew)
    t = mat_mul(rat_inverse(mat_add(one, k)), mat_sub(one, k))
    return validate_similarity(lattice, t)


def random_coincidence(rng: random.Random, lattice: Lattice) -> SimilarityMap:
    return cayley_map(lattice, random_skew(rng, lattice.dim))


def planar_similarity(lattice: Lattice, a: Fraction, b: Fraction) -> SimilarityMap:
    """a + b*J where J = G^-1 [[0,-1],[1,0]] is a scaled quarter turn.

    The multiplier is a^2 + b^2 / det G; every similarity of a planar
    lattice has this form.
    """
    j = mat_mul(rat_inverse(lattice.gram), PLANAR_ROTATION)
    t = mat_add(scale(Fraction(a), identity(2, Fraction(1))), scale(Fraction(b), j))
    return validate_similarity(lattice, t)


def quaternion_matrix(a: int, b: int, c: int, d: int) -> Matrix:
    """Left multiplication by a + bi + cj + dk on R^4; T^T T = |q|^2 I."""
    return (
        (a, -b, -c, -d),
        (b, a, -d, c),
        (c, d, a, -b),
        (d, -c, b, a),
    )


def eisenstein_matrix(a: int, b: int) -> Matrix:
    """Multiplication by a + b*rho (rho a sixth root of unity) on the hexagonal
    lattice with Gram [[2,1],[1,2]]; the multiplier is a^2 + ab + b^2."""
    return ((a, -b), (b, a + b))


def hexagonal_coincidence(a: int, b: int) -> SimilarityMap:
    """z / conj(z) for z = a + b*rho, a coincidence map of the hexagonal lattice."""
    hexl = hexagonal_lattice()
    z = eisenstein_matrix(a, b)
    zbar = eisenstein_matrix(a + b, -b)
    return validate_similarity(hexl, mat_mul(z, rat_inverse(zbar)))


def _nonzero_ints(rng: random.Random, k: int, bound: int) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(k)]
        if any(v):
            return v


def base_similarity(rng: random.Random, lattice: Lattice) -> SimilarityMap:
    """An unconjugated similarity, with a non-square multiplier where the lattice admits one."""
    d = lattice.dim
    g = lattice.gram
    if d == 2:
        a, b = random_rational(rng, nonzero=False), random_rational(rng, nonzero=False)
        while not a and not b:
            a = random_rational(rng)
        return planar_similarity(lattice, a, b)
    if d == 4 and g == identity(4, Fraction(1)):
        return validate_similarity(lattice, quaternion_matrix(*_nonzero_ints(rng, 4, 3)))
    if d == 4 and g == tuple(tuple(Fraction(x) for x in r) for r in _DIAG_1122):
        a, b = _nonzero_ints(rng, 2, 4)
        t = ((a, -b, 0, 0), (b, a, 0, 0), (0, 0, a, -b), (0, 0, b, a))
        return validate_similarity(lattice, t)
    q = random_rational(rng)
    # in odd dimension a negative scalar reverses orientation
    if d % 2:
        q = abs(q)
    return validate_similarity(lattice, scale(q, identity(d, Fraction(1))))


def random_similarity(rng: random.Random, lattice: Lattice, conjugate: bool = True) -> SimilarityMap:
    s = base_similarity(rng, lattice)
    if not conjugate:
        return s
    t = s.T
    if rng.random() < 0.7:
        t = mat_mul(random_coincidence(rng, lattice).T, t)
    if rng.random() < 0.7:
        t = mat_mul(t, random_coincidence(rng, lattice).T)
    return validate_similarity(lattice, t)


def random_gauss(rng: random.Random, max_norm: int) -> GaussInt:
    r = int(max_norm ** 0.5)
    while True:
        z = GaussInt(rng.randint(-r, r), rng.randint(-r, r))
        if z and z.norm() <= max_norm:
            return z


_DIAG_1122 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))


def standard_lattices() -> dict[str, Lattice]:
    return {
        "Z2": square_lattice(2),
        "hexagonal": hexagonal_lattice(),
        "diag(1,2)": make_lattice(((1, 0), (0, 2))),
        "diag(1,2,3)": make_lattice(((1, 0, 0), (0, 2, 0), (0, 0, 3))),
        "Z3": square_lattice(3),
        "Z4": square_lattice(4),
        "diag(1,1,2,2)": make_lattice(_DIAG_1122),
    }


def lattices_by_dimension(rng: random.Random, dims: tuple[int, ...] = (2, 3, 4)) -> list[Lattice]:
    """Standard lattices of the requested dimensions plus one random Gram per dimension."""
    out = [lat for lat in standard_lattices().values() if lat.dim in dims]
    out.extend(random_gram(rng, d) for d in dims)
    return out
