"""Exception hierarchy shared by all hoveylab modules."""

from __future__ import annotations


class HoveylabError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(HoveylabError):
    """Structurally invalid data: bad shapes, unknown ids, broken JSON specs."""


class IncompatibleInputError(HoveylabError):
    """Objects that do not live over the same algebra / universe."""


class NonAdmissibleIdealError(HoveylabError):
    """The relation ideal is not admissible (basis computation did not certify
    nilpotency of the arrow ideal within the length cap)."""


class PreconditionError(HoveylabError):
    """An operation was called with unverified or violated preconditions."""


class CapExceededError(HoveylabError):
    """A search space estimate exceeded the configured hard cap."""


class UndecidedError(HoveylabError):
    """A search ended without a decision; never silently reported as a verdict."""
