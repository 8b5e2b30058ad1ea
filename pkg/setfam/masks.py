"""
Subset masks and family bit-vectors over a small ground set.

Element i of the ground set is bit i of a mask. A family of subsets is a
Python int read as a bit-vector of length 2**n: bit A is set iff the subset
with mask A belongs to the family.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import GroundSetError, MaskOutOfRange

MAX_FAMILY_GROUND = 12
MAX_ENUM_GROUND = 7


@dataclass(frozen=True)
class GroundSet:
    """A finite set {0, ..., n-1} with optional display labels."""

    n: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GroundSetError(f"Ground set needs at least one element, got n={self.n!r}")
        if self.n > MAX_FAMILY_GROUND:
            raise GroundSetError(f"Ground set of size {self.n} exceeds the limit of {MAX_FAMILY_GROUND}")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.n:
                raise GroundSetError(f"Expected {self.n} labels, got {len(labels)}")
            if len(set(labels)) != self.n:
                raise GroundSetError(f"Labels must be pairwise distinct: {labels}")
            object.__setattr__(self, "labels", labels)

    @property
    def full(self) -> int:
        """Mask of the whole ground set."""
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        """Number of subsets, i.e. the length of a family bit-vector."""
        return 1 << self.n

    def check(self, mask: int) -> int:
        if not 0 <= mask < self.size:
            raise MaskOutOfRange(f"Mask {mask} is outside [0, {self.size}) for n={self.n}")
        return mask

    def complement(self, mask: int) -> int:
        return self.full ^ self.check(mask)

    def label(self, element: int) -> str:
        return self.labels[element] if self.labels else str(element)

    def index_of(self, item: Union[int, str]) -> int:
        """Element of an index, or of a string: a label when the set is labelled, else a digit string."""
        if isinstance(item, str):
            if self.labels:
                if item in self.labels:
                    return self.labels.index(item)
            elif item.isdigit() and int(item) < self.n:
                return int(item)
            raise MaskOutOfRange(f"Unknown element {item!r}")
        if not 0 <= item < self.n:
            raise MaskOutOfRange(f"Element {item} is outside the ground set of size {self.n}")
        return item

    def mask_of(self, items: Iterable[Union[int, str]]) -> int:
        """Mask of a collection of element indices or labels."""
        mask = 0
        for item in items:
            mask |= 1 << self.index_of(item)
        return mask

    def parse_mask(self, text: str) -> int:
        """Parse the shorthand `xyz` (one character per element) or `{x,y,z}`."""
        text = text.strip()
        if text.startswith("{") and text.endswith("}"):
            return self.mask_of(part.strip() for part in text[1:-1].split(",") if part.strip())
        return self.mask_of(list(text))

    def format_mask(self, mask: int) -> str:
        """`xyz` when every label of the ground set is one character, `{x,y,z}` otherwise."""
        names = [self.label(i) for i in elements(self.check(mask))]
        if self.single_character:
            return "".join(names)
        return "{" + ",".join(names) + "}"

    @property
    def single_character(self) -> bool:
        return all(len(self.label(i)) == 1 for i in range(self.n))


def elements(mask: int) -> List[int]:
    """Element indices of a mask, ascending."""
    return list(iter_bits(mask))


def iter_bits(bits: int) -> Iterator[int]:
    """Positions of the set bits of a non-negative int, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def canonical_order(masks: Iterable[int]) -> List[int]:
    """Sort masks by (cardinality, numeric value)."""
    return sorted(masks, key=lambda mask: (mask.bit_count(), mask))


def bits_of(masks: Sequence[int]) -> int:
    bits = 0
    for mask in masks:
        bits |= 1 << mask
    return bits


@lru_cache(maxsize=None)
def all_masks(n: int) -> int:
    """Bit-vector holding every subset of an n-element set."""
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def element_planes(n: int) -> Tuple[int, ...]:
    """plane[i] is the bit-vector of all masks that contain element i."""
    planes = []
    for i in range(n):
        plane = 0
        for mask in range(1 << n):
            if mask >> i & 1:
                plane |= 1 << mask
        planes.append(plane)
    return tuple(planes)


def up_close_bits(bits: int, n: int) -> int:
    """Close a family bit-vector upwards: add every superset of every member."""
    for i, plane in enumerate(element_planes(n)):
        bits |= (bits << (1 << i)) & plane
    return bits


def non_minimal_bits(bits: int, n: int) -> int:
    """Members A having some A minus {i} in the family.

    For an upfamily these are exactly the members that are not inclusion-minimal.
    """
    found = 0
    for i, plane in enumerate(element_planes(n)):
        found |= (bits << (1 << i)) & plane
    return found & bits


def mirror_bits(bits: int, n: int) -> int:
    """Map a family to the family of complements of its members."""
    width = 1 << n
    return int(format(bits, f"0{width}b")[::-1], 2)
