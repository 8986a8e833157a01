"""Exception hierarchy shared by every layer."""


class IdealizationError(Exception):
    """Base class for all library errors."""


class DegreeMismatchError(IdealizationError, ValueError):
    pass


class NotUnitNormalizedError(IdealizationError, ValueError):
    """Denominator constant term is not 1."""


class SeriesShapeError(IdealizationError, ValueError):
    """Denominator is not of the shape 1 - t*P(t) with P >= 0."""


class TruncationError(IdealizationError, ValueError):
    """Requested degree exceeds the data that was supplied."""


class ValidationError(IdealizationError, ValueError):
    """A model invariant does not hold; the message names the constraint."""


class RingMismatchError(IdealizationError, ValueError):
    pass


class HypothesisUnmetError(IdealizationError):
    """A theorem's hypothesis is not asserted or not satisfied."""


class ConsistencyError(IdealizationError, AssertionError):
    """Two computations that must agree did not. Always a bug or contradictory input."""
