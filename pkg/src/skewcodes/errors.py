"""Exception types raised across the package."""


class SkewCodesError(Exception):
    """Base class for all package errors."""


class InvalidParams(SkewCodesError, ValueError):
    pass


class NotPrime(InvalidParams):
    pass


class EvenCharacteristic(InvalidParams):
    pass


class FieldTooLarge(InvalidParams):
    pass


class DivisionByZero(SkewCodesError, ZeroDivisionError):
    pass


class IndexOutOfRange(InvalidParams):
    pass


class RankTooLarge(InvalidParams):
    pass


class DimensionMismatch(InvalidParams):
    pass


class BudgetExceeded(SkewCodesError):
    """Raised when an exhaustive enumeration would exceed its budget."""


class TooLarge(InvalidParams):
    pass
