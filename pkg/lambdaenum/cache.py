"""
Binary cache of enumerated maximal linked families.

Layout (little-endian): magic "LMLF", format version u16, n u8, family count
u64, then one membership bit-vector of byte_width(n) bytes per family in
ascending order, then the 64-bit FNV-1a hash of everything before it.
"""

import os
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

from loguru import logger

from setfam import GroundSet, MaxLinkedFamily, byte_width

from .errors import CacheIOError, CorruptCache
from .search import LAMBDA_NUMBERS, check_ground, enumerate_lambda

MAGIC = b"LMLF"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sHBQ")
CHECKSUM = struct.Struct("<Q")

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

PathLike = Union[str, os.PathLike]


def fnv1a64(data: bytes) -> int:
    value = FNV_OFFSET
    for byte in data:
        value = ((value ^ byte) * FNV_PRIME) & _MASK64
    return value


@dataclass(frozen=True)
class LambdaCache:
    n: int
    families: Tuple[MaxLinkedFamily, ...]
    checksum: int

    @classmethod
    def build(cls, families: List[MaxLinkedFamily], n: int) -> "LambdaCache":
        ordered = tuple(sorted(families, key=lambda family: family.bits))
        return cls(n, ordered, fnv1a64(_payload(n, [family.bits for family in ordered])))

    @classmethod
    def compute(cls, n: int, workers: int = 1) -> "LambdaCache":
        return cls.build(enumerate_lambda(GroundSet(n), workers=workers), n)


def _payload(n: int, bit_vectors: List[int]) -> bytes:
    width = byte_width(n)
    body = b"".join(bits.to_bytes(width, "little") for bits in bit_vectors)
    return HEADER.pack(MAGIC, FORMAT_VERSION, n, len(bit_vectors)) + body


def cache_path(directory: PathLike, n: int) -> Path:
    return Path(directory) / f"lambda{n}.lmlf"


def save_cache(c: LambdaCache, path: PathLike) -> None:
    payload = _payload(c.n, [family.bits for family in c.families])
    try:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(payload + CHECKSUM.pack(fnv1a64(payload)))
    except OSError as e:
        raise CacheIOError(f"Could not write cache {path}: {e}") from e
    logger.info(f"Saved {len(c.families)} families for n={c.n} to {path}")


def load_cache(path: PathLike) -> LambdaCache:
    """Read a cache file, verifying structure, checksum, order and count."""
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise CacheIOError(f"Could not read cache {path}: {e}") from e

    if len(raw) < HEADER.size + CHECKSUM.size:
        raise CorruptCache(f"{path}: file too short for a cache header")
    magic, version, n, count = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise CorruptCache(f"{path}: bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise CorruptCache(f"{path}: unsupported format version {version}")
    try:
        check_ground(n)
    except ValueError as e:
        raise CorruptCache(f"{path}: {e}") from e

    width = byte_width(n)
    expected_size = HEADER.size + count * width + CHECKSUM.size
    if len(raw) != expected_size:
        raise CorruptCache(f"{path}: expected {expected_size} bytes, found {len(raw)}")

    payload = raw[:-CHECKSUM.size]
    (stored,) = CHECKSUM.unpack_from(raw, len(payload))
    actual = fnv1a64(payload)
    if stored != actual:
        raise CorruptCache(f"{path}: checksum mismatch ({stored:#018x} != {actual:#018x})")

    ground = GroundSet(n)
    families = []
    previous = -1
    for offset in range(HEADER.size, len(payload), width):
        bits = int.from_bytes(payload[offset:offset + width], "little")
        if bits <= previous:
            raise CorruptCache(f"{path}: families are not in strictly ascending order")
        previous = bits
        families.append(MaxLinkedFamily(ground, bits))

    if len(families) != LAMBDA_NUMBERS[n]:
        raise CorruptCache(f"{path}: holds {len(families)} families, expected {LAMBDA_NUMBERS[n]} for n={n}")
    logger.debug(f"Loaded {len(families)} families for n={n} from {path}")
    return LambdaCache(n, tuple(families), actual)


def load_or_compute(directory: PathLike, n: int, workers: int = 1, write: bool = True) -> LambdaCache:
    """Load the n-point cache from `directory`, enumerating (and saving) on a miss."""
    path = cache_path(directory, n)
    if path.exists():
        try:
            return load_cache(path)
        except CorruptCache as e:
            logger.warning(f"Ignoring corrupt cache: {e}")
    cache = LambdaCache.compute(n, workers=workers)
    if write:
        save_cache(cache, path)
    return cache
