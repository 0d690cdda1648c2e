"""Dense exact matrices as tuples of row tuples.

Entries may be ints, Fractions or QuadExt values; every routine here only
uses field operations, so the same code serves integer, rational and
quadratic-field matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from csl.errors import Singular

Matrix = tuple[tuple[Any, ...], ...]


def as_matrix(rows: Sequence[Sequence[Any]]) -> Matrix:
    out = tuple(tuple(r) for r in rows)
    if not out or any(len(r) != len(out[0]) for r in out) or not out[0]:
        raise ValueError("matrix must be a non-empty rectangular array")
    return out


def to_fractions(rows: Sequence[Sequence[Any]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0])


def identity(d: int, one: Any = 1) -> Matrix:
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    cols = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), start=0 * row[0]) for col in cols)
        for row in a
    )


def scale(c: Any, m: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in m)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_integral(m: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for r in m for x in r)


def to_ints(m: Matrix) -> Matrix:
    if not is_integral(m):
        raise ValueError("matrix has non-integer entries")
    return tuple(tuple(int(x) for x in r) for r in m)


def _field(x: Any) -> Any:
    # ints are promoted so that elimination divides exactly
    return Fraction(x) if isinstance(x, int) else x


def det(m: Matrix) -> Any:
    """Determinant by Gaussian elimination over the entries' field."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    a = [[_field(x) for x in r] for r in m]
    sign = 1
    result = a[0][0] - a[0][0] + 1
    for j in range(n):
        piv = next((i for i in range(j, n) if a[i][j] != 0), None)
        if piv is None:
            return result - result
        if piv != j:
            a[j], a[piv] = a[piv], a[j]
            sign = -sign
        p = a[j][j]
        result = result * p
        for i in range(j + 1, n):
            f = a[i][j] / p
            if f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
    result = result * sign
    if isinstance(result, Fraction) and all(isinstance(x, int) for r in m for x in r):
        return int(result)
    return result


def rat_inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises Singular."""
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    a = [[_field(x) for x in r] for r in m]
    one = a[0][0] - a[0][0] + 1
    zero = one - one
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for j in range(n):
        piv = next((i for i in range(j, n) if a[i][j] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[j], a[piv] = a[piv], a[j]
        inv[j], inv[piv] = inv[piv], inv[j]
        p = a[j][j]
        a[j] = [x / p for x in a[j]]
        inv[j] = [x / p for x in inv[j]]
        for i in range(n):
            if i != j and a[i][j] != 0:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[j])]
    return tuple(tuple(r) for r in inv)


def leading_minors(m: Matrix) -> list[Any]:
    return [det(tuple(r[:k] for r in m[:k])) for k in range(1, len(m) + 1)]
