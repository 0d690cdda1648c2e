"""Lattices as rational Gram matrices and similarity maps in lattice
coordinates.

A map is an exact rational matrix T acting on coordinate vectors, with
``T.T @ G @ T == m * G``. Geometrically T is alpha*R with alpha = sqrt(m) and
R a rotation, so the irrational scale only ever appears through m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from csl.errors import (
    LatticeMismatch,
    NotCoincidence,
    NotPositiveDefinite,
    NotSimilarity,
    NotSymmetric,
    OrientationReversing,
    Singular,
)
from csl.exact.matrix import (
    Matrix,
    as_matrix,
    det,
    identity,
    leading_minors,
    mat_mul,
    rat_inverse,
    scale,
    to_fractions,
    transpose,
)
from csl.exact.quadext import QuadExt
from csl.exact.rational import rational_sqrt
from csl.exact.sublattice import coordinate_intersection, index_of_sublattice


@dataclass(frozen=True)
class Lattice:
    dim: int
    gram: Matrix

    def __post_init__(self) -> None:
        gram = to_fractions(as_matrix(self.gram))
        if len(gram) != self.dim or len(gram[0]) != self.dim:
            raise ValueError(f"Gram matrix is not {self.dim}x{self.dim}")
        object.__setattr__(self, "gram", gram)
        if self.dim < 2:
            raise ValueError("lattice dimension must be at least 2")
        if gram != transpose(gram):
            raise NotSymmetric("Gram matrix is not symmetric")
        if any(mnr <= 0 for mnr in leading_minors(gram)):
            raise NotPositiveDefinite("Gram matrix is not positive definite")


def make_lattice(gram: Matrix) -> Lattice:
    gram = as_matrix(gram)
    if len(gram) != len(gram[0]):
        raise ValueError("Gram matrix must be square")
    return Lattice(len(gram), gram)


def square_lattice(d: int = 2) -> Lattice:
    return make_lattice(identity(d))


def hexagonal_lattice() -> Lattice:
    return make_lattice(((2, 1), (1, 2)))


@dataclass(frozen=True)
class SimilarityMap:
    lattice: Lattice
    T: Matrix
    multiplier: Fraction

    @property
    def dim(self) -> int:
        return self.lattice.dim


@dataclass(frozen=True)
class CoincidenceMap(SimilarityMap):
    def __post_init__(self) -> None:
        if self.multiplier != 1:
            raise NotCoincidence(f"multiplier {self.multiplier} != 1")


@dataclass(frozen=True)
class SigmaPair:
    """Indices [Γ : Γ∩TΓ] and [TΓ : Γ∩TΓ]."""

    sigma1: int
    sigma2: int


def validate_similarity(lattice: Lattice, t: Matrix) -> SimilarityMap:
    """Check ``T.T G T = m G`` with m > 0 and det T = +m^(d/2)."""
    t = to_fractions(as_matrix(t))
    d = lattice.dim
    if len(t) != d or len(t[0]) != d:
        raise ValueError(f"map is not {d}x{d}")
    dt = det(t)
    if dt == 0:
        raise Singular("map is singular")
    g = lattice.gram
    tgt = mat_mul(mat_mul(transpose(t), g), t)
    # G[0][0] > 0 by positive definiteness
    m = tgt[0][0] / g[0][0]
    if tgt != scale(m, g):
        raise NotSimilarity("T^T G T is not a rational multiple of G")
    # det(T)^2 == m^d follows from the similarity relation
    if dt < 0:
        raise OrientationReversing("map reverses orientation")
    cls = CoincidenceMap if m == 1 else SimilarityMap
    return cls(lattice, t, m)


def is_commensurate(b1: Matrix, b2: Matrix) -> bool:
    """Whether two lattices, given by basis columns over Q or Q(sqrt n),
    are commensurate: exactly when B1^-1 B2 has rational entries."""
    change = mat_mul(rat_inverse(as_matrix(b1)), as_matrix(b2))
    return all(not isinstance(x, QuadExt) or x.is_rational for r in change for x in r)


def coincidence_index(s: SimilarityMap) -> SigmaPair:
    csl = coordinate_intersection(s.T)
    return SigmaPair(
        index_of_sublattice(identity(s.dim), csl),
        index_of_sublattice(s.T, csl),
    )


def coincidence_site_lattice(s: SimilarityMap) -> Matrix:
    """Basis columns of Γ ∩ TΓ in lattice coordinates."""
    return coordinate_intersection(s.T)


def _same_lattice(s1: SimilarityMap, s2: SimilarityMap) -> None:
    if s1.lattice != s2.lattice:
        raise LatticeMismatch("maps act on different lattices")


def compose(s1: SimilarityMap, s2: SimilarityMap) -> SimilarityMap:
    """The map s1 ∘ s2 (apply s2 first)."""
    _same_lattice(s1, s2)
    m = s1.multiplier * s2.multiplier
    cls = CoincidenceMap if m == 1 else SimilarityMap
    return cls(s1.lattice, mat_mul(s1.T, s2.T), m)


def invert(s: SimilarityMap) -> SimilarityMap:
    m = 1 / s.multiplier
    cls = CoincidenceMap if m == 1 else SimilarityMap
    return cls(s.lattice, rat_inverse(s.T), m)


def identity_map(lattice: Lattice) -> CoincidenceMap:
    return CoincidenceMap(lattice, to_fractions(identity(lattice.dim)), Fraction(1))


def normalize_to_coincidence(s: SimilarityMap) -> CoincidenceMap:
    """Strip the scale from s when sqrt(m) is rational.

    Succeeds exactly for maps whose rotation part is a coincidence rotation.
    """
    q = rational_sqrt(s.multiplier)
    if q is None:
        raise NotCoincidence(f"multiplier {s.multiplier} is not a rational square")
    return CoincidenceMap(s.lattice, scale(1 / q, s.T), Fraction(1))


def rescale(s: SimilarityMap, b: Any) -> SimilarityMap:
    """The map b*T, re-validated from scratch."""
    return validate_similarity(s.lattice, scale(Fraction(b), s.T))
