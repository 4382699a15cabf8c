"""Exception hierarchy shared by every arrdmod module."""

from __future__ import annotations


class ArrdmodError(Exception):
    """Base class for all library errors."""


class ValidationError(ArrdmodError, ValueError):
    """Malformed input: shape mismatch, bad rational, duplicate hyperplane."""


class PreconditionError(ArrdmodError, ValueError):
    """An operation was called outside its stated contract."""


class UnsupportedDimensionError(PreconditionError):
    """Plane-only operation invoked with ambient dimension != 2."""


class MissingResolutionError(PreconditionError):
    """Resolution data required (non normal crossing, dimension >= 3) but absent."""


class ResourceLimitError(ArrdmodError, RuntimeError):
    """Enumeration would exceed the configured hyperplane-count limit."""
