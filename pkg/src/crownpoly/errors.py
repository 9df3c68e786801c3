"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """An enumeration bound or step budget would be exceeded."""


class MathError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
