from dataclasses import dataclass
from functools import lru_cache
from typing import Protocol, Tuple

import numpy as np

from setfam import GroundSet, MaxLinkedFamily

from .errors import GroundMismatch


class Home(Protocol):
    """A finite semigroup given by its Cayley table (groups qualify)."""

    name: str

    @property
    def size(self) -> int: ...

    @property
    def table(self) -> Tuple[Tuple[int, ...], ...]: ...

    def label(self, x: int) -> str: ...


@dataclass(frozen=True, eq=False)
class LambdaElement:
    """A maximal linked family over the elements of `home`."""

    family: MaxLinkedFamily
    home: Home

    def __post_init__(self):
        if self.family.n != self.home.size:
            raise GroundMismatch(
                f"Family over {self.family.n} points cannot live on {self.home.name} of order {self.home.size}"
            )

    @property
    def bits(self) -> int:
        return self.family.bits

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaElement):
            return NotImplemented
        return self.home is other.home and self.family.bits == other.family.bits

    def __hash__(self) -> int:
        return hash((id(self.home), self.family.bits))

    def __repr__(self) -> str:
        return f"LambdaElement({self.family.describe()} on {self.home.name})"


def ground_of(home: Home) -> GroundSet:
    return GroundSet(home.size, getattr(home, "labels", None))


def element(home: Home, bits: int) -> LambdaElement:
    return LambdaElement(MaxLinkedFamily(ground_of(home), bits), home)


@lru_cache(maxsize=None)
def quotient_masks(home: Home) -> np.ndarray:
    """quot[C, s] is the mask of {x : s·x in C}."""
    n = home.size
    masks = np.arange(1 << n, dtype=np.int64)
    quot = np.zeros((1 << n, n), dtype=np.int64)
    for s in range(n):
        for x in range(n):
            quot[:, s] |= ((masks >> home.table[s][x]) & 1) << x
    return quot
