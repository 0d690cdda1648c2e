"""Hermite and Smith normal forms of integer matrices.

Both routines are the textbook cubic-time row/column reductions with the
unimodular transforms tracked alongside. Entries are Python ints, so there
is no overflow to worry about; coefficient growth is harmless at d <= 8.
"""

from __future__ import annotations

from dataclasses import dataclass

from csl.errors import RankDeficient, Singular
from csl.exact.matrix import Matrix, as_matrix, identity


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _elimination(p: int, q: int) -> tuple[int, int, int, int]:
    """Unimodular 2x2 step taking (p, q) to (gcd, 0).

    When p already divides q this is a plain subtraction, which keeps the
    pivot row untouched; the reductions below rely on that to terminate.
    """
    if q % p == 0:
        return 1, 0, -(q // p), 1
    g, x, y = _xgcd(p, q)
    return x, y, -q // g, p // g


def _combine_rows(rows: list[list[int]], i: int, k: int, c: tuple[int, int, int, int]) -> None:
    """Replace (row_i, row_k) by (x r_i + y r_k, u r_i + v r_k)."""
    x, y, u, v = c
    ri, rk = rows[i], rows[k]
    rows[i] = [x * p + y * q for p, q in zip(ri, rk)]
    rows[k] = [u * p + v * q for p, q in zip(ri, rk)]


def hnf(m: Matrix, allow_rank_deficient: bool = False) -> tuple[Matrix, Matrix]:
    """Hermite normal form ``H = U @ M`` under integer row operations.

    H is in row echelon form: each pivot is positive, the pivot of row r lies
    strictly right of the pivot of row r-1, entries above a pivot are reduced
    into ``[0, pivot)``, and zero rows (rank deficiency) sit at the bottom.
    ``U`` is unimodular. Without ``allow_rank_deficient`` the matrix must
    have full column rank.
    """
    m = as_matrix(m)
    rows, cols = len(m), len(m[0])
    h = [[int(x) for x in r] for r in m]
    u = [list(r) for r in identity(rows)]
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        if r == rows:
            break
        for k in range(r + 1, rows):
            if h[k][j] != 0:
                if h[r][j] == 0:
                    h[r], h[k] = h[k], h[r]
                    u[r], u[k] = u[k], u[r]
                    continue
                c = _elimination(h[r][j], h[k][j])
                _combine_rows(h, r, k, c)
                _combine_rows(u, r, k, c)
        if h[r][j] == 0:
            continue
        if h[r][j] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        p = h[r][j]
        for i in range(r):
            q = h[i][j] // p
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        pivots.append(j)
        r += 1
    if len(pivots) < cols and not allow_rank_deficient:
        raise RankDeficient(f"rank {len(pivots)} < {cols} columns")
    return as_matrix(h), as_matrix(u)


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with D diagonal, d_i >= 0 and d_i | d_(i+1)."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(len(self.D)))


def snf(m: Matrix) -> SnfResult:
    """Smith normal form of a square nonsingular integer matrix."""
    m = as_matrix(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("snf needs a square matrix")
    a = [[int(x) for x in r] for r in m]
    u = [list(r) for r in identity(n)]
    # V is tracked through its transpose so column operations become row operations
    vt = [list(r) for r in identity(n)]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        vt[i], vt[j] = vt[j], vt[i]

    def combine_cols(i: int, k: int, c: tuple[int, int, int, int]) -> None:
        x, y, w, z = c
        for row in a:
            p, q = row[i], row[k]
            row[i], row[k] = x * p + y * q, w * p + z * q
        _combine_rows(vt, i, k, c)

    for t in range(n):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
        if not nonzero:
            raise Singular("matrix is singular")
        _, i0, j0 = min(nonzero)
        a[t], a[i0] = a[i0], a[t]
        u[t], u[i0] = u[i0], u[t]
        swap_cols(t, j0)
        while True:
            for k in range(t + 1, n):
                if a[k][t]:
                    c = _elimination(a[t][t], a[k][t])
                    _combine_rows(a, t, k, c)
                    _combine_rows(u, t, k, c)
            for k in range(t + 1, n):
                if a[t][k]:
                    combine_cols(t, k, _elimination(a[t][t], a[t][k]))
            if any(a[k][t] for k in range(t + 1, n)):
                continue
            p = a[t][t]
            bad = next(
                (k for k in range(t + 1, n) for j in range(t + 1, n) if a[k][j] % p),
                None,
            )
            if bad is None:
                break
            # fold the offending row in so the next pass lowers the pivot to a gcd
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    v = [list(col) for col in zip(*vt)]
    return SnfResult(as_matrix(a), as_matrix(u), as_matrix(v))
