"""Exception types shared across the library."""


class DickekitError(Exception):
    """Base class for all library-specific errors."""


class DomainError(DickekitError, ValueError):
    """An input lies outside an operation's documented domain."""


class InvariantViolationError(DickekitError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
