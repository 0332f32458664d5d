# coding=utf-8
"""Exceptions raised by the saltbox-roof library."""


class SaltboxRoofError(ValueError):
    """Base class for all saltbox-roof errors."""


class DomainViolation(SaltboxRoofError):
    """An input lies outside the domain of the distribution or operation.

    Args:
        message: Text describing the failure.
        clause: Short text naming the condition that failed (eg. 'a<b').
    """

    def __init__(self, message, clause=None):
        SaltboxRoofError.__init__(self, message)
        self.clause = clause


class NonFinite(SaltboxRoofError):
    """An evaluation point or a result is NaN or infinite."""


class FlatShape(SaltboxRoofError):
    """The heights at the mode and at b are equal so no finite apex exists."""


class DegenerateWindow(SaltboxRoofError):
    """A truncation window holds (almost) no probability mass."""


class NoConvergence(SaltboxRoofError):
    """An iterative numerical routine reached its limit without converging."""


class BracketViolation(SaltboxRoofError):
    """The target of a bisection is not bracketed by the search interval."""


class EmptySample(SaltboxRoofError):
    """A statistic was requested for a sample with no values."""
