"""Exception types shared across the package."""

from __future__ import annotations


class LissatoricError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(LissatoricError, ValueError):
    """Invalid (N, q, p) triple or out-of-range argument."""


class StrandMismatchError(LissatoricError, ValueError):
    pass


class CriticalPhaseError(LissatoricError):
    """The phase makes the curve singular: a crossing degenerates into a double point.

    Callers are expected to perturb the phase and retry.
    """


class StrandLimitError(LissatoricError):
    pass


class UnsupportedClosureError(LissatoricError):
    """Raised when a braid closure is a link with more than one component."""
