"""The scale homomorphism eta: SOS -> R*/Q* and the factor group SOS/SOC.

For rational lattices every scale alpha satisfies alpha^2 in Q, so eta lands
in the square classes of positive rationals. A class is stored as its
squarefree integer representative: alpha = sqrt(m) with m = a/b in lowest
terms has class sf(a*b), since sqrt(a/b) = sqrt(a*b)/b.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from csl.errors import DimensionViolation, NotCoincidence
from csl.exact.rational import is_squarefree, squarefree_part
from csl.gaussian import SosFactorization
from csl.lattice import SimilarityMap, normalize_to_coincidence


@dataclass(frozen=True, order=True)
class EtaClass:
    squarefree_part: int

    def __post_init__(self) -> None:
        if not is_squarefree(self.squarefree_part):
            raise ValueError(f"{self.squarefree_part} is not a squarefree positive integer")

    @property
    def is_identity(self) -> bool:
        return self.squarefree_part == 1


IDENTITY = EtaClass(1)


def eta_of(s: SimilarityMap) -> EtaClass:
    m = s.multiplier
    return EtaClass(squarefree_part(m.numerator * m.denominator))


def class_mul(c1: EtaClass, c2: EtaClass) -> EtaClass:
    # product of two squarefree numbers, with the common square g^2 removed
    g = gcd(c1.squarefree_part, c2.squarefree_part)
    return EtaClass((c1.squarefree_part // g) * (c2.squarefree_part // g))


def class_order(c: EtaClass, dim: int | None = None) -> int:
    """Order of c in R*/Q*; with ``dim`` given, enforce that it divides dim."""
    order = 1 if c.is_identity else 2
    if dim is not None and dim % order:
        raise DimensionViolation(f"class {c.squarefree_part} has order {order}, not dividing d = {dim}")
    return order


def eta_of_direction(s: SosFactorization) -> EtaClass:
    """Square class of |z| for the direction data of z in Z[i]."""
    out = 2 if s.eighth_exp % 2 else 1
    for p, ell in s.factors.items():
        if ell % 2:
            out *= p
    return EtaClass(out)


def is_in_kernel(s: SimilarityMap) -> bool:
    return eta_of(s).is_identity


def kernel_agrees(s: SimilarityMap) -> bool:
    """is_in_kernel(s) holds exactly when s normalizes to a coincidence map."""
    try:
        normalize_to_coincidence(s)
        normalizable = True
    except NotCoincidence:
        normalizable = False
    return normalizable == is_in_kernel(s)
