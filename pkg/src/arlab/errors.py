"""Exception types shared across the package."""

from __future__ import annotations


class ArlabError(Exception):
    """Base class for all package errors."""


class InvalidParameter(ArlabError, ValueError):
    """A parameter is outside the domain of the operation."""


class Infeasible(ArlabError):
    """The requested object provably does not exist."""


class NotFound(ArlabError):
    """A construction search was exhausted without producing an object."""


class CapExceeded(ArlabError):
    """A resource cap was hit before an exact answer could be certified."""
