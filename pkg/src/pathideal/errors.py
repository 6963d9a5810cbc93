"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "PathIdealError",
    "AmbientMismatchError",
    "ExponentOverflowError",
    "SizeCapExceededError",
    "ColonFormMismatchError",
]


class PathIdealError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(PathIdealError):
    """Operands live in polynomial rings with different variable counts."""


class ExponentOverflowError(PathIdealError):
    """An exponent or total degree exceeded the configured hard cap."""


class SizeCapExceededError(PathIdealError):
    """An enumeration grew past its configured size cap.

    Carries the offending count so callers can report how far the
    enumeration got before aborting.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class ColonFormMismatchError(PathIdealError):
    """A brute-force colon ideal disagreed with its closed-form prediction."""
