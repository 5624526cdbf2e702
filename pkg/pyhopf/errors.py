"""Exceptions raised by pyHopf.

Verification routines do not raise when a law is violated, they return a report. The exceptions below signal
invalid input or a mathematical obstruction that makes the requested object impossible to build.
"""


class PyHopfError(Exception):
    """Base class for all pyHopf errors."""


# arithmetic
# ==========

class InversionFailure(PyHopfError, ArithmeticError):
    """A nonzero element turned out not to be a unit.

    In a field tower this means that one of the declared minimal polynomials is not irreducible."""


class SingularMatrix(PyHopfError, ArithmeticError):
    pass


class NoSolution(PyHopfError, ArithmeticError):
    pass


# shape and consistency
# =====================

class DimensionMismatch(PyHopfError, ValueError):
    pass


class IncompatibleFields(PyHopfError, ValueError):
    pass


class RingMismatch(PyHopfError, ValueError):
    pass


class NotGoodBasis(PyHopfError, ValueError):
    pass


class InvalidGroupTable(PyHopfError, ValueError):
    pass


class PointNotOnVariety(PyHopfError, ValueError):
    pass


class EmptyVariety(PyHopfError, ValueError):
    pass


class DocumentError(PyHopfError, ValueError):
    """A problem document does not match the schema. The message names the offending key path."""


# mathematical obstructions
# =========================

class NoAntipode(PyHopfError, RuntimeError):
    pass


class CharacteristicObstruction(PyHopfError, RuntimeError):
    pass


class IllDefined(PyHopfError, RuntimeError):
    pass


class NotAProduct(PyHopfError, RuntimeError):
    pass


class ChecksNotPassed(PyHopfError, RuntimeError):
    pass
