"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class EaqmdsError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(EaqmdsError, ValueError):
    pass


class MagnitudeExceeded(EaqmdsError, OverflowError):
    pass


class FieldMismatch(EaqmdsError, ValueError):
    pass


class DivisionByZero(EaqmdsError, ZeroDivisionError):
    pass


class NotAQuadraticExtension(EaqmdsError, ValueError):
    pass


class OrderDoesNotDivide(EaqmdsError, ValueError):
    pass


class NoEmbedding(EaqmdsError, ValueError):
    pass


class DivisionByZeroPolynomial(EaqmdsError, ZeroDivisionError):
    pass


class NonCoprimeLength(EaqmdsError, ValueError):
    pass


class SNotInAmbient(EaqmdsError, ValueError):
    pass


class NotInAmbient(EaqmdsError, ValueError):
    pass


class InvalidDefiningSet(EaqmdsError, ValueError):
    """Residues are outside O_rn or not closed under multiplication by q^2."""


class CoefficientOutsideSubfield(EaqmdsError, ArithmeticError):
    pass


class ZeroDimensional(EaqmdsError, ValueError):
    pass


class FullCode(EaqmdsError, ValueError):
    pass


class NonpositiveLogicalDimension(EaqmdsError, ValueError):
    pass


class OracleBudgetExceeded(EaqmdsError, RuntimeError):
    pass


class NotAdmissible(EaqmdsError, ValueError):
    pass


class LambdaOutOfRange(EaqmdsError, ValueError):
    pass
