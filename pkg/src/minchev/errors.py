"""Exception types raised across the package."""


class MinchevError(Exception):
    """Base class for all errors raised by minchev."""


class RankOutOfRange(MinchevError, ValueError):
    pass


class NotMinuscule(MinchevError, ValueError):
    pass


class InvalidSelection(MinchevError, ValueError):
    """A node selection that does not describe a union of distinct orbits."""


class EmptySelection(InvalidSelection):
    pass


class RingMismatch(MinchevError, TypeError):
    pass


class DimMismatch(MinchevError, ValueError):
    pass


class NonUnit(MinchevError, ValueError):
    pass


class InconsistentConstant(MinchevError):
    """A bracket of root vectors is not a multiple of the expected root vector."""


class NotUnipotent(MinchevError, ValueError):
    pass


class FactorizationFailed(MinchevError):
    pass


class CapExceeded(MinchevError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class Unsupported(MinchevError, NotImplementedError):
    pass


class VerificationError(MinchevError, AssertionError):
    """Two independent routes to the same quantity disagree."""
