"""Exception hierarchy for toristab."""


class ToristabError(Exception):
    """Base class for all library errors."""


class ZeroDeterminant(ToristabError, ValueError):
    pass


class NotComplexSpectrum(ToristabError, ValueError):
    pass


class EmptyInterval(ToristabError, ValueError):
    pass


class ZeroVector(ToristabError, ValueError):
    pass


class NotComplete(ToristabError, ValueError):
    pass


class TooFewRays(ToristabError, ValueError):
    pass


class NotApplicable(ToristabError, ValueError):
    pass


class OrbitBoundExceeded(ToristabError, RuntimeError):
    pass


class SaturationBudgetExceeded(ToristabError, RuntimeError):
    """Backward saturation ran past its step budget.

    The fan built so far is kept on ``partial_fan`` for inspection.
    """

    def __init__(self, message, partial_fan=None):
        super().__init__(message)
        self.partial_fan = partial_fan


class InternalInvariant(ToristabError, AssertionError):
    """A postcondition that the construction guarantees did not hold."""
