"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented exit statuses without a lookup table.
"""


class SSLevelError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class UsageError(SSLevelError):
    """Malformed input supplied by a caller (bad syntax, invalid argument)."""

    exit_code = 1


class VerificationFailure(SSLevelError):
    """A golden fixture or cross-check disagreed with a computed value."""

    exit_code = 2


class InvariantViolation(SSLevelError):
    """An internal consistency check failed; indicates a bug."""

    exit_code = 3


# qseries
class NonIntegralValuation(UsageError):
    pass


class InsufficientPrecision(InvariantViolation):
    pass


class DivisionByZeroSeries(InvariantViolation):
    pass


# modular curves
class ParseError(UsageError):
    pass


class NotExactDivisor(UsageError):
    pass


class InvalidDiscriminant(UsageError):
    pass


class PrimeDividesLevel(UsageError):
    pass


class NonIntegralGenus(InvariantViolation):
    pass


# supersingular polynomials
class UnsupportedLevel(UsageError):
    pass


class NonPolynomialResidual(InvariantViolation):
    pass


class PDividesDenominator(InvariantViolation):
    pass


class LeadingCoefficientNotUnit(InvariantViolation):
    pass


class NotSquarefree(InvariantViolation):
    pass


class IrreducibleFactorDegreeExceedsTwo(InvariantViolation):
    pass


# rationality
class MethodDisagreement(InvariantViolation):
    pass


class FixtureMismatch(VerificationFailure):
    def __init__(self, message, rows=()):
        super().__init__(message)
        self.rows = list(rows)


# oracle
class FieldTooLarge(UsageError):
    pass


class DenominatorVanishes(InvariantViolation):
    pass
