class GroundMismatch(ValueError):
    """Raised when operands live over different ground sets or homes."""


class NotMaximal(RuntimeError):
    """Raised when a computed family fails to be maximal linked."""


class NotAUnit(ValueError):
    """Raised when an affine multiplier is not invertible modulo the group order."""
