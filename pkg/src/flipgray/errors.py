"""Exception types shared across the package."""


class GrayCodeError(Exception):
    pass


class MalformedText(GrayCodeError, ValueError):
    pass


class InvariantViolation(GrayCodeError, ValueError):
    pass


class DuplicateObject(GrayCodeError, ValueError):
    pass


class MixedSizes(GrayCodeError, ValueError):
    pass


class InapplicableFlip(GrayCodeError, ValueError):
    pass


class SizeMismatch(GrayCodeError, ValueError):
    pass


class KindMismatch(GrayCodeError, ValueError):
    pass


class NotContinuous(GrayCodeError, ValueError):
    pass


class EmptyInstance(GrayCodeError, ValueError):
    pass


class BadIndices(GrayCodeError, ValueError):
    pass


class BoundExceeded(GrayCodeError):
    """Raised when an exhaustive routine is asked to run above its size bound."""


class ResourceLimit(GrayCodeError):
    """The search hit its node budget before deciding the instance.

    This is not a "no" answer; ``stats`` holds the counters at the moment
    the budget ran out.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats or {}
