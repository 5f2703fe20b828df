"""Exception hierarchy.

Errors fall into two groups. Input errors (bad parameters, malformed
expressions, extensions that are not fully ramified) are raised when the
caller asks for something that does not exist. Check failures
(``*Violated``, ``*Mismatch``) signal that an exact identity did not hold,
which always means an arithmetic bug rather than bad input.
"""


class RamacError(Exception):
    """Base class for every error raised by this package."""


class CheckFailure(RamacError):
    """An exact identity that must hold did not."""


# -- finite fields / Laurent polynomials ------------------------------------

class FieldMismatch(RamacError):
    pass


class DivisionByZero(RamacError, ZeroDivisionError):
    pass


class ZeroElement(RamacError):
    pass


class NonMonomialDivisor(RamacError):
    pass


class InexactDivision(RamacError):
    """The divisor does not divide the dividend in F_q[t, 1/t]."""


# -- towers -----------------------------------------------------------------

class ZeroRhs(RamacError):
    pass


class NotFullyRamified(RamacError):
    pass


class NonIncreasingUpperBreak(RamacError):
    pass


class TowerMismatch(RamacError):
    pass


class NonRepresentableInverse(RamacError):
    pass


class GaloisStabilityViolated(CheckFailure):
    pass


# -- ramification / normal bases --------------------------------------------

class DifferentMismatch(CheckFailure):
    pass


class IdentityViolated(CheckFailure):
    pass


class TraceIdealViolated(CheckFailure):
    pass


class EulerIdentityViolated(CheckFailure):
    pass


class CriterionViolated(CheckFailure):
    pass


class SamplerStarved(RamacError):
    pass


class InvalidClass(RamacError):
    pass


class BadParameters(RamacError):
    pass


# -- expression parsing -----------------------------------------------------

class ExprSyntaxError(RamacError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownVariable(RamacError):
    pass
