class GroundSetError(ValueError):
    """Raised when a ground set is malformed or exceeds the supported size."""


class EmptyBaseSet(ValueError):
    """Raised when the empty set is offered as a member or generator of a family."""


class MaskOutOfRange(ValueError):
    """Raised when a subset mask does not fit the ambient ground set."""


class NotUpwardClosed(ValueError):
    """Raised when an operation needs an upfamily and gets something else."""


class NotMaximalLinked(ValueError):
    """Raised when a family is required to be maximal linked but is not."""


class CharacterizationMismatch(RuntimeError):
    """The self-dual test and the extension test disagree; always a bug."""
