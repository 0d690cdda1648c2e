"""Brute-force reference computations.

These deliberately avoid the normal-form machinery: indices are obtained by
counting residue classes, determinants by cofactor expansion, Smith
invariants from gcds of minors, squarefree parts by trial division.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt, lcm

from csl.exact.matrix import Matrix, rat_inverse


def cofactor_det(m: Matrix):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = tuple(r[:j] + r[j + 1:] for r in m[1:])
            total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def determinantal_divisors(m: Matrix) -> list[int]:
    """Invariant factors d_k = D_k / D_(k-1), D_k the gcd of all k x k minors."""
    n = len(m)
    big = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                g = gcd(g, cofactor_det(tuple(tuple(m[i][j] for j in cols) for i in rows)))
        big.append(g)
    return [big[k] // big[k - 1] for k in range(1, n + 1)]


def _denominator_lcm(m: Matrix) -> int:
    return lcm(*(Fraction(x).denominator for r in m for x in r))


def _count_integral_images(m: Matrix, k: int) -> int:
    """Number of x in [0, k)^d with M x integral."""
    t = _denominator_lcm(m)
    rows = [[int(Fraction(a) * t) for a in row] for row in m]
    return sum(
        1
        for x in product(range(k), repeat=len(m))
        if all(sum(a * b for a, b in zip(row, x)) % t == 0 for row in rows)
    )


def residue_index(b: Matrix, c: Matrix) -> int:
    """[B Z^d : C Z^d] by counting residues of B-coordinates modulo k Z^d.

    With k Z^d inside the sublattice, the index is k^d divided by the number
    of residues x in [0, k)^d that lie in the sublattice.
    """
    c_in_b = _mul(rat_inverse(b), c)
    inv = rat_inverse(c_in_b)
    k = _denominator_lcm(inv)
    return k ** len(b) // _count_integral_images(inv, k)


def residue_sigma(t: Matrix) -> tuple[int, int]:
    """([Z^d : Z^d ∩ T Z^d], [T Z^d : Z^d ∩ T Z^d]) by residue counting."""
    d = len(t)
    inv = rat_inverse(t)
    k1 = _denominator_lcm(inv)
    # x in Z^d lies in T Z^d iff T^-1 x is integral; k1 Z^d lies in both lattices
    sigma1 = k1 ** d // _count_integral_images(inv, k1)
    k2 = _denominator_lcm(t)
    sigma2 = k2 ** d // _count_integral_images(t, k2)
    return sigma1, sigma2


def _mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(x * y for x, y in zip(r, col)) for col in zip(*b)) for r in a)


def squarefree_by_trial(n: int) -> int:
    k = isqrt(n)
    while k > 1:
        if n % (k * k) == 0:
            return squarefree_by_trial(n // (k * k))
        k -= 1
    return n


def norms_up_to(bound: int) -> set[int]:
    r = isqrt(bound)
    return {a * a + b * b for a in range(-r, r + 1) for b in range(-r, r + 1) if 0 < a * a + b * b <= bound}
