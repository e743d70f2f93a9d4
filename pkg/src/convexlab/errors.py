"""Exception hierarchy shared by every module."""


class ConvexLabError(Exception):
    """Base class for all library errors."""


class DegenerateInput(ConvexLabError):
    """The point set or map does not produce a full-dimensional body."""


class DimensionMismatch(ConvexLabError):
    pass


class FieldMismatch(ConvexLabError):
    """Exact and float operands were mixed in one operation."""


class NegativeAmount(ConvexLabError):
    pass


class PreconditionViolated(ConvexLabError):
    pass


class OutOfDomain(ConvexLabError):
    pass


class NonPositiveVolume(ConvexLabError):
    pass


class NonPositiveInput(ConvexLabError):
    pass


class KindMismatch(ConvexLabError):
    """A function of the wrong convexity kind was supplied."""


class HypothesisViolated(ConvexLabError):
    """The slope-gap hypothesis of the quantitative lemma fails.

    ``witness`` holds the offending ``(slope_f, slope_g)`` pair.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DomainMismatch(ConvexLabError):
    pass


class NotAligned(ConvexLabError):
    """The chord through the origin is not a maximal slice."""
