"""Exception hierarchy.

Every error raised by the library derives from :class:`SelfAuthError`, which
is itself a :class:`ValueError` so callers that only care about "bad input"
can catch that.
"""


class SelfAuthError(ValueError):
    pass


class UnsupportedFormat(SelfAuthError):
    pass


class Truncated(SelfAuthError):
    pass


class MalformedHeader(SelfAuthError):
    pass


class OddDimensions(SelfAuthError):
    pass


class DimensionMismatch(SelfAuthError):
    pass


class CapacityMismatch(SelfAuthError):
    pass


class OddPlaneLength(SelfAuthError):
    pass


class RangeViolation(SelfAuthError):
    pass


class ZeroReference(SelfAuthError):
    pass


class InvalidKey(SelfAuthError):
    pass
