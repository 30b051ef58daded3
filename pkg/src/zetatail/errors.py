"""Exception hierarchy shared by every zetatail module."""


class ZetaTailError(Exception):
    """Base class for all errors raised by zetatail."""


class DivisionByIntervalContainingZero(ZetaTailError, ZeroDivisionError):
    pass


class ZeroStraddle(DivisionByIntervalContainingZero):
    """Raised when inverting an enclosure that contains zero."""


class NonPositiveBase(ZetaTailError, ValueError):
    pass


class WidthNotReached(ZetaTailError, ArithmeticError):
    """The term or precision budget ran out before the target width was met."""


class ParityError(ZetaTailError, ValueError):
    pass


class EpsilonOutOfRange(ZetaTailError, ValueError):
    pass


class UnsupportedS(ZetaTailError, ValueError):
    pass


class OutOfValidityRange(ZetaTailError, ValueError):
    pass


class DomainError(ZetaTailError, ValueError):
    pass
