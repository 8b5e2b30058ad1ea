class NotAGroup(ValueError):
    """Raised when a Cayley table fails the group axioms."""


class OrderTooLarge(ValueError):
    """Raised when a group exceeds the order an operation is bounded to."""


class UnknownGroupSpec(ValueError):
    """Raised when a textual group description cannot be parsed."""
