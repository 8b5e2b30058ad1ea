"""
Enumeration, counting and caching of maximal linked families.
"""

from .cache import (
    FORMAT_VERSION,
    MAGIC,
    LambdaCache,
    cache_path,
    fnv1a64,
    load_cache,
    load_or_compute,
    save_cache,
)
from .config import Config
from .errors import CacheIOError, CorruptCache, GroundTooLarge
from .oracle import BRUTE_FORCE_LIMIT, brute_force_bits
from .search import (
    LAMBDA_NUMBERS,
    check_ground,
    count_lambda,
    enumerate_bits,
    enumerate_lambda,
    pair_order,
    split_frontier,
)

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "FORMAT_VERSION",
    "LAMBDA_NUMBERS",
    "MAGIC",
    "CacheIOError",
    "Config",
    "CorruptCache",
    "GroundTooLarge",
    "LambdaCache",
    "brute_force_bits",
    "cache_path",
    "check_ground",
    "count_lambda",
    "enumerate_bits",
    "enumerate_lambda",
    "fnv1a64",
    "load_cache",
    "load_or_compute",
    "pair_order",
    "save_cache",
    "split_frontier",
]
