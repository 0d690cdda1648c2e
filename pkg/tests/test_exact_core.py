from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st
from sympy import Matrix as SymMatrix
from sympy.matrices.normalforms import smith_normal_form

from csl.errors import DivisionByZero, MixedField, NotCommensurate, NotSublattice, RankDeficient, Singular
from csl.exact import (
    QuadExt,
    clear_denominators,
    det,
    hnf,
    identity,
    index_of_sublattice,
    is_integral,
    lattice_intersection,
    mat_mul,
    rat_inverse,
    scale,
    snf,
)
from csl.exact.quadext import parse_quadext
from csl.exact.rational import format_rational, parse_rational, rational_sqrt, squarefree_part
from csl.oracles import cofactor_det, determinantal_divisors, residue_index

F = Fraction
ROT = ((F(3, 5), F(-4, 5)), (F(4, 5), F(3, 5)))


def int_matrices(min_dim=2, max_dim=5, lo=-9, hi=9):
    return st.integers(min_dim, max_dim).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: tuple(tuple(r) for r in rows))
    )


def is_upper_hnf(h):
    last = -1
    for r, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(rr) for rr in h[r:])
            return True
        j = nz[0]
        assert j > last and row[j] > 0
        assert all(0 <= h[i][j] < row[j] for i in range(r))
        last = j
    return True


class TestRationalText:
    @pytest.mark.parametrize("text,value", [("3/5", F(3, 5)), ("-4/6", F(-2, 3)), ("7", F(7)), (" +2 / 4 ", F(1, 2))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["1.5", "1e3", "1/0", "", "a", "1/-2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_format_is_lowest_terms(self):
        assert format_rational(F(6, 4)) == "3/2"
        assert format_rational(F(4, 2)) == "2"
        assert format_rational(F(-1, 3)) == "-1/3"

    @given(st.fractions())
    def test_round_trip(self, x):
        assert parse_rational(format_rational(x)) == x

    def test_squarefree_and_sqrt(self):
        assert squarefree_part(450) == 2
        assert rational_sqrt(F(9, 4)) == F(3, 2)
        assert rational_sqrt(F(2)) is None


class TestHnf:
    def test_identity(self):
        h, u = hnf(((1, 0), (0, 1)))
        assert h == ((1, 0), (0, 1)) and u == ((1, 0), (0, 1))

    def test_positive_diagonal_is_fixed(self):
        assert hnf(((2, 0), (0, 3)))[0] == ((2, 0), (0, 3))

    def test_det_preserved(self):
        m = ((2, 4), (6, 8))
        h, u = hnf(m)
        assert abs(cofactor_det(h)) == abs(cofactor_det(m)) == 8
        assert h == ((2, 0), (0, 4))
        assert mat_mul(u, m) == h

    def test_rank_deficient(self):
        m = ((1, 2), (2, 4))
        with pytest.raises(RankDeficient):
            hnf(m)
        h, u = hnf(m, allow_rank_deficient=True)
        assert h[1] == (0, 0) and mat_mul(u, m) == h

    @given(int_matrices())
    def test_unimodular_and_reproducing(self, m):
        h, u = hnf(m, allow_rank_deficient=True)
        assert mat_mul(u, m) == h
        assert abs(cofactor_det(u)) == 1
        assert is_upper_hnf(h)
        assert abs(cofactor_det(h)) == abs(cofactor_det(m))


class TestSnf:
    def test_examples(self):
        assert snf(((2, 0), (0, 3))).diagonal == (1, 6)
        assert snf(((1, 0), (0, 1))).diagonal == (1, 1)
        assert snf(((2, 4), (6, 8))).diagonal == (2, 4)
        assert determinantal_divisors(((2, 4), (6, 8))) == [2, 4]

    def test_singular(self):
        with pytest.raises(Singular):
            snf(((1, 2), (2, 4)))

    def test_divisible_pivot_terminates(self):
        m = ((-9, 6, 4), (9, 7, 0), (2, 3, -1))
        r = snf(m)
        assert list(r.diagonal) == determinantal_divisors(m)
        assert mat_mul(mat_mul(r.U, m), r.V) == r.D

    @given(int_matrices())
    def test_against_oracles(self, m):
        d = cofactor_det(m)
        assume(d != 0)
        r = snf(m)
        diag = r.diagonal
        assert mat_mul(mat_mul(r.U, m), r.V) == r.D
        assert all(r.D[i][j] == 0 for i in range(len(m)) for j in range(len(m)) if i != j)
        assert abs(cofactor_det(r.U)) == abs(cofactor_det(r.V)) == 1
        assert all(x > 0 for x in diag)
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(d)
        if len(m) <= 3:
            assert list(diag) == determinantal_divisors(m)

    def test_matches_sympy(self):
        m = ((12, 6, 4), (3, 9, 6), (2, 16, 14))
        expected = smith_normal_form(SymMatrix(m))
        assert snf(m).diagonal == tuple(abs(expected[i, i]) for i in range(3))


class TestInverseAndDenominators:
    def test_inverse_examples(self):
        assert rat_inverse(identity(2, F(1))) == identity(2, F(1))
        assert rat_inverse(ROT) == ((F(3, 5), F(4, 5)), (F(-4, 5), F(3, 5)))
        with pytest.raises(Singular):
            rat_inverse(((1, 1), (1, 1)))

    @given(int_matrices(2, 4, -5, 5))
    def test_inverse_is_exact(self, m):
        assume(cofactor_det(m) != 0)
        assert mat_mul(m, rat_inverse(m)) == identity(len(m), F(1))

    def test_clear_denominators(self):
        assert clear_denominators(ROT) == (5, ((3, -4), (4, 3)))
        assert clear_denominators(((1, 2), (3, 4))) == (1, ((1, 2), (3, 4)))
        assert clear_denominators(((F(1, 2), F(1, 3)), (0, 1))) == (6, ((3, 2), (0, 6)))


class TestIntersectionAndIndex:
    def test_identity(self):
        eye = identity(2, F(1))
        c = lattice_intersection(eye, eye)
        assert index_of_sublattice(eye, c) == 1

    def test_rotation_index_five(self):
        eye = identity(2, F(1))
        c = lattice_intersection(eye, ROT)
        assert index_of_sublattice(eye, c) == residue_index(eye, c) == 5
        assert index_of_sublattice(ROT, c) == residue_index(ROT, c) == 5

    def test_nested(self):
        eye = identity(2, F(1))
        two = scale(2, eye)
        c = lattice_intersection(eye, two)
        assert is_integral(mat_mul(rat_inverse(two), c)) and is_integral(mat_mul(rat_inverse(c), two))

    def test_index_examples(self):
        eye = identity(2, F(1))
        assert index_of_sublattice(eye, scale(2, eye)) == 4
        assert index_of_sublattice(eye, ((1, -1), (1, 1))) == 2
        # |alpha^d| = 5^2 for alpha R = 5 * rotation
        assert index_of_sublattice(eye, ((3, -4), (4, 3))) == 25

    def test_not_sublattice(self):
        with pytest.raises(NotSublattice):
            index_of_sublattice(identity(2, F(1)), ROT)

    def test_irrational_change_of_basis(self):
        eye = identity(2, F(1))
        with pytest.raises(NotCommensurate):
            lattice_intersection(eye, scale(QuadExt.sqrt(2), eye))

    def test_quadext_bases_that_agree(self):
        r2 = QuadExt.sqrt(2)
        b1 = scale(r2, ((1, 0), (0, 1)))
        b2 = scale(r2, ((2, 1), (0, 1)))
        c = lattice_intersection(b1, b2)
        assert index_of_sublattice(b1, c) == 2

    @given(int_matrices(2, 3, -4, 4))
    def test_index_matches_residue_oracle(self, m):
        d = cofactor_det(m)
        assume(d != 0 and abs(d) <= 50)
        eye = identity(len(m), F(1))
        assert index_of_sublattice(eye, m) == residue_index(eye, m) == abs(d)

    @given(int_matrices(2, 3, -4, 4), st.integers(1, 4))
    def test_intersection_containment(self, m, den):
        assume(cofactor_det(m) != 0)
        eye = identity(len(m), F(1))
        b2 = scale(F(1, den), m)
        c = lattice_intersection(eye, b2)
        for b in (eye, b2):
            assert is_integral(mat_mul(rat_inverse(b), c))
        t1, _ = clear_denominators(b2)
        t2, _ = clear_denominators(rat_inverse(b2))
        for b in (eye, b2):
            assert is_integral(mat_mul(rat_inverse(c), scale(t1 * t2, b)))
        # covolume bookkeeping: [Γ1 : C] covol(Γ1) = [Γ2 : C] covol(Γ2)
        assert index_of_sublattice(eye, c) == index_of_sublattice(b2, c) * abs(det(b2))


quads = st.builds(
    lambda a, b: QuadExt(a, b, 2),
    st.fractions(min_value=-100, max_value=100, max_denominator=20),
    st.fractions(min_value=-100, max_value=100, max_denominator=20),
)


class TestQuadExt:
    def test_examples(self):
        r2 = QuadExt.sqrt(2)
        assert (1 + r2) * (1 - r2) == -1
        assert r2 * r2 == 2
        inv = 1 / (1 + r2)
        assert inv == QuadExt(-1, 1, 2)
        assert inv * (1 + r2) == 1

    def test_errors(self):
        with pytest.raises(DivisionByZero):
            QuadExt.sqrt(2) / QuadExt(0, 0, 2)
        with pytest.raises(MixedField):
            QuadExt.sqrt(2) + QuadExt.sqrt(3)
        with pytest.raises(ValueError):
            QuadExt(1, 1, 4)

    def test_serialization(self):
        x = QuadExt(F(1, 2), F(-3), 5)
        assert str(x) == "1/2+-3*sqrt(5)"
        assert parse_quadext(str(x)) == x
        assert parse_quadext("1+1*sqrt(2)") == 1 + QuadExt.sqrt(2)

    @given(quads, quads, quads)
    def test_field_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x - x == 0 and (x - x).is_rational
        if z != 0:
            assert (x / z) * z == x

    @given(quads)
    def test_rationality_is_exact(self, x):
        assert x.is_rational == (x.b == 0)
        assert (x * x.conjugate()).is_rational
