"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured size bound."""


class ParseError(ValueError):
    """Malformed serialized input (graph, spec or polynomial text)."""
