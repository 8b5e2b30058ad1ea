from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Tuple

from .errors import (
    CharacterizationMismatch,
    EmptyBaseSet,
    MaskOutOfRange,
    NotMaximalLinked,
    NotUpwardClosed,
)
from .masks import (
    GroundSet,
    all_masks,
    bits_of,
    canonical_order,
    iter_bits,
    mirror_bits,
    non_minimal_bits,
    up_close_bits,
)

# Ground sizes up to this bound also run the definitional maximality test.
DEFINITIONAL_CHECK_LIMIT = 4


@dataclass(frozen=True)
class Family:
    """A family of non-empty subsets of `ground`, stored as a membership bit-vector."""

    ground: GroundSet
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ground.size:
            raise MaskOutOfRange(f"Bit-vector does not fit 2**{self.ground.n} masks")
        if self.bits & 1:
            raise EmptyBaseSet("A family cannot contain the empty set")

    @property
    def n(self) -> int:
        return self.ground.n

    def __contains__(self, mask: int) -> bool:
        return bool(self.bits >> mask & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def is_upward_closed(self) -> bool:
        return up_close_bits(self.bits, self.n) == self.bits

    def to_bytes(self) -> bytes:
        return self.bits.to_bytes(byte_width(self.n), "little")

    def describe(self) -> str:
        """Render as ⟨generators⟩ using minimal members when upward closed."""
        masks = minimal_sets(self) if self.is_upward_closed() else canonical_order(self)
        return "⟨" + ", ".join(self.ground.format_mask(mask) for mask in masks) + "⟩"


@dataclass(frozen=True)
class MaxLinkedFamily(Family):
    """A maximal linked upfamily.

    The plain constructor trusts its input (the enumerator builds these in bulk);
    use `from_family` or `from_generators` to validate.
    """

    @cached_property
    def minimal_sets(self) -> Tuple[int, ...]:
        return tuple(minimal_sets(self))

    @classmethod
    def from_family(cls, family: Family) -> "MaxLinkedFamily":
        if not is_maximal_linked(family):
            raise NotMaximalLinked(f"Not a maximal linked family: {family.describe()}")
        return cls(family.ground, family.bits)

    @classmethod
    def from_generators(cls, base: Iterable[int], ground: GroundSet) -> "MaxLinkedFamily":
        return cls.from_family(up_closure(list(base), ground))


def byte_width(n: int) -> int:
    """Bytes needed for a bit-vector over all 2**n masks."""
    return ((1 << n) + 7) // 8


def up_closure(base: List[int], ground: GroundSet) -> Family:
    """The upfamily generated by `base`: every superset of some base mask."""
    for mask in base:
        ground.check(mask)
        if mask == 0:
            raise EmptyBaseSet("Generators of an upfamily must be non-empty")
    return Family(ground, up_close_bits(bits_of(base), ground.n))


def principal(ground: GroundSet, element: int) -> MaxLinkedFamily:
    """The principal ultrafilter ⟨{x}⟩."""
    mask = ground.check(1 << ground.index_of(element))
    return MaxLinkedFamily(ground, up_close_bits(1 << mask, ground.n))


def _linked_upfamily(bits: int, n: int) -> bool:
    # An upfamily has two disjoint members iff it holds some set and its complement.
    return not bits & mirror_bits(bits, n)


def is_linked(f: Family) -> bool:
    """True iff every two members of `f` intersect."""
    return _linked_upfamily(up_close_bits(f.bits, f.n), f.n)


def _self_dual_test(f: Family) -> bool:
    n, bits = f.n, f.bits
    if up_close_bits(bits, n) != bits:
        return False
    mirrored = mirror_bits(bits, n)
    return not bits & mirrored and bits | mirrored == all_masks(n)


def _extension_test(f: Family) -> bool:
    n, bits = f.n, f.bits
    if up_close_bits(bits, n) != bits or not _linked_upfamily(bits, n):
        return False
    for mask in range(1, f.ground.size):
        if bits >> mask & 1:
            continue
        if _linked_upfamily(up_close_bits(bits | 1 << mask, n), n):
            return False
    return True


def is_maximal_linked(f: Family) -> bool:
    """True iff `f` is a linked upfamily admitting no strictly larger linked family.

    Uses the self-dual characterization; on small grounds the definitional
    extension test runs as well and the two must agree.
    """
    verdict = _self_dual_test(f)
    if f.n <= DEFINITIONAL_CHECK_LIMIT and _extension_test(f) != verdict:
        raise CharacterizationMismatch(f"Maximality tests disagree on {f.describe()}")
    return verdict


def minimal_sets(f: Family) -> List[int]:
    """Inclusion-minimal members of an upfamily, sorted by (cardinality, mask)."""
    if not f.is_upward_closed():
        raise NotUpwardClosed("Minimal sets are only defined here for upfamilies")
    return canonical_order(iter_bits(f.bits & ~non_minimal_bits(f.bits, f.n)))
