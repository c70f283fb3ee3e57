"""Exception hierarchy.

Every error raised on purpose by the package derives from ``AutoseqError``
so the CLI can map it to a validation exit code.  Field errors that have a
natural builtin parent also subclass it.
"""


class AutoseqError(Exception):
    pass


class CompositeP(AutoseqError, ValueError):
    pass


class ReducibleModulus(AutoseqError, ValueError):
    pass


class FieldMismatch(AutoseqError, TypeError):
    pass


class DivisionByZero(AutoseqError, ZeroDivisionError):
    pass


class ZeroSeries(DivisionByZero):
    pass


class ZeroDenominator(DivisionByZero):
    pass


class NotCharPower(AutoseqError, ValueError):
    pass


class PrecisionTooLow(AutoseqError, ValueError):
    pass


class SpecError(AutoseqError, ValueError):
    """Invalid recurrence parameters; ``field`` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class KNotDividingR(SpecError):
    pass


class GammaNotCoprime(SpecError):
    pass


class ZeroAlpha(SpecError):
    pass


class WrongCharacteristic(SpecError):
    pass


class RNotCharPower(SpecError):
    pass


class WrongR(SpecError):
    pass


class NoNonzeroU(AutoseqError, ValueError):
    pass


class PrefixTooShort(AutoseqError, ValueError):
    pass


class KernelNotClosed(AutoseqError, ValueError):
    pass


class NotPeriodic(AutoseqError, ValueError):
    pass


class VerificationFailure(AutoseqError):
    """An identity that must hold exactly did not."""
