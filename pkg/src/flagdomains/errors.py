"""Exception types shared across the package."""

__all__ = ["ParameterError", "DomainError", "ConsistencyError", "CapacityError"]


class ParameterError(ValueError):
    """Invalid sizes, dimension mismatches, or malformed arguments."""


class DomainError(ValueError):
    """A value outside an operation's domain, e.g. a vector that is not a root."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; unreachable for valid inputs."""


class CapacityError(RuntimeError):
    """An enumeration would exceed a configured cap."""
