class GroundTooLarge(ValueError):
    """Raised when a ground set exceeds what an enumeration path supports."""


class CorruptCache(ValueError):
    """Raised when a cache file fails its structural, checksum or count checks."""


class CacheIOError(OSError):
    """Raised when a cache file cannot be read or written."""
