"""Semantic exception hierarchy for the geninv package."""


class GeninvError(Exception):
    """Base class for all geninv errors."""


class NonPositiveDenominator(GeninvError, ValueError):
    """A rational literal carried a zero or negative denominator."""


class ParseError(GeninvError, ValueError):
    """A function file or numeric literal could not be parsed."""


class MalformedShape(GeninvError, ValueError):
    """Structural defect: segment/breakpoint counts or ordering are wrong."""


class MonotonicityViolation(GeninvError, ValueError):
    """The described function decreases somewhere.

    Carries ``segment_index`` or ``breakpoint_index`` pointing at the offender.
    """

    def __init__(self, message, *, segment_index=None, breakpoint_index=None):
        super().__init__(message)
        self.segment_index = segment_index
        self.breakpoint_index = breakpoint_index


class NotOneSidedContinuous(GeninvError, ValueError):
    """A globally one-sided-continuous function was required but not supplied.

    ``side`` is "left" or "right"; ``witness`` is a breakpoint where the
    required one-sided limit differs from the stored value.
    """

    def __init__(self, side, witness):
        super().__init__(f"function is not {side}-continuous at x = {witness}")
        self.side = side
        self.witness = witness


class UnknownProperty(GeninvError, KeyError):
    """A property id is not in the suite registry."""


class NotRightContinuous(GeninvError, ValueError):
    """A CDF candidate fails right-continuity; ``witness`` is the bad point."""

    def __init__(self, witness):
        super().__init__(f"not right-continuous at x = {witness}")
        self.witness = witness


class BadLimits(GeninvError, ValueError):
    """A CDF candidate does not tend to 0 at -inf and 1 at +inf."""


class OutOfUnitRange(GeninvError, ValueError):
    """A CDF candidate takes values outside [0, 1]."""


class EmptySample(GeninvError, ValueError):
    """An empirical CDF was requested for an empty sample."""
