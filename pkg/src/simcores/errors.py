class DomainError(ValueError):
    """Input outside the domain of a combinatorial operation."""


class InvariantError(AssertionError):
    """An identity the library re-verifies at runtime turned out false."""


class ResourceCapError(DomainError):
    """Requested grid exceeds the configured desk-scale caps."""
