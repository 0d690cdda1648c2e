"""Exception hierarchy.

Every error carries a stable ``code`` (printed verbatim by the CLI) and a
distinct ``exit_code``.
"""


class CslError(Exception):
    code = "CslError"
    exit_code = 1


class ParseError(CslError, ValueError):
    """Malformed rational, complex literal or JSON document."""

    code = "ParseError"
    exit_code = 2


# exact core
class RankDeficient(CslError, ValueError):
    code = "RankDeficient"
    exit_code = 10


class Singular(CslError, ValueError):
    code = "Singular"
    exit_code = 11


class NotCommensurate(CslError, ValueError):
    code = "NotCommensurate"
    exit_code = 12


class NotSublattice(CslError, ValueError):
    code = "NotSublattice"
    exit_code = 13


class DivisionByZero(CslError, ZeroDivisionError):
    code = "DivisionByZero"
    exit_code = 14


class MixedField(CslError, ValueError):
    """Quadratic-field operands with different radicands."""

    code = "MixedField"
    exit_code = 15


# lattice model
class NotSymmetric(CslError, ValueError):
    code = "NotSymmetric"
    exit_code = 20


class NotPositiveDefinite(CslError, ValueError):
    code = "NotPositiveDefinite"
    exit_code = 21


class NotSimilarity(CslError, ValueError):
    code = "NotSimilarity"
    exit_code = 22


class OrientationReversing(CslError, ValueError):
    code = "OrientationReversing"
    exit_code = 23


class LatticeMismatch(CslError, ValueError):
    code = "LatticeMismatch"
    exit_code = 24


class NotCoincidence(CslError, ValueError):
    """The multiplier is not a rational square."""

    code = "NotCoincidence"
    exit_code = 25


# gaussian plane
class BothZero(CslError, ValueError):
    code = "BothZero"
    exit_code = 30


class NotSplitPrime(CslError, ValueError):
    code = "NotSplitPrime"
    exit_code = 31


class ZeroInput(CslError, ValueError):
    code = "ZeroInput"
    exit_code = 32


class NotUnitModulus(CslError, ValueError):
    code = "NotUnitModulus"
    exit_code = 33


# factor group
class DimensionViolation(CslError, AssertionError):
    """An element order does not divide the lattice dimension."""

    code = "DimensionViolation"
    exit_code = 40


# cli
class SuiteFailed(CslError, AssertionError):
    code = "SuiteFailed"
    exit_code = 50


ALL_ERRORS = tuple(CslError.__subclasses__())
