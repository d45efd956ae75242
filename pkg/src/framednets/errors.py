"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FramedNetError(Exception):
    """Base class for every error raised by this package."""


class InputError(FramedNetError, ValueError):
    """Malformed or inconsistent input (lengths, parameters, literals)."""


class CapacityError(FramedNetError):
    """An operation would exceed an explicit enumeration cap."""


class LiftingError(FramedNetError, ValueError):
    """A tau-word is not orthogonal to the extending code."""


class ModelInconsistency(FramedNetError):
    """The dimension-one accounting failed for some tau-word.

    ``quantities`` carries the offending values so callers can report them.
    """

    def __init__(self, message: str, **quantities: int) -> None:
        super().__init__(message)
        self.quantities = quantities


class ConstructionFailure(FramedNetError):
    """No spin-one class exists where one is required."""


class InvalidModularData(FramedNetError, ValueError):
    """Spins do not define a quadratic form on the group."""


class DegeneracyError(FramedNetError):
    """The spin bicharacter has a nontrivial radical."""
