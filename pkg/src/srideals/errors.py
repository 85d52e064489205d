"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded one of the configurable size caps."""
