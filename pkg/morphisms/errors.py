class NotAnAutomorphism(RuntimeError):
    """Raised when a map expected to be a semigroup automorphism is not one."""
