class NotAssociative(ValueError):
    """Raised when a Cayley table fails associativity."""


class NotASemilattice(ValueError):
    """Raised when two idempotents do not commute."""


class NotCentral(ValueError):
    """Raised when the acting group is not central, so orbits do not multiply."""


class NotAGroupAction(ValueError):
    """Raised when translations do not form a group action."""


class NameResolutionFailure(ValueError):
    """Raised when a named element is missing or a product cannot be named."""


class SearchTooLarge(ValueError):
    """Raised when a bounded search would exceed its limit."""
