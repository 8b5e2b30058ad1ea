"""
Finite semigroups given by Cayley tables.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from groups import check_associative

from .errors import NotAssociative

EXHAUSTIVE_LIMIT = 100
SAMPLED_TRIPLES = 100_000


def is_associative(array: np.ndarray, seed: int = 0) -> bool:
    """Exhaustive up to EXHAUSTIVE_LIMIT elements, sampled triples above."""
    size = array.shape[0]
    if size <= EXHAUSTIVE_LIMIT:
        return check_associative(array)
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, size, size=(3, SAMPLED_TRIPLES))
    return bool(np.array_equal(array[array[x, y], z], array[x, array[y, z]]))


@dataclass(frozen=True, eq=False)
class SemigroupTable:
    table: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None
    name: str = "S"

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        size = len(table)
        if size == 0:
            raise NotAssociative("A semigroup needs at least one element")
        if any(len(row) != size for row in table):
            raise NotAssociative("Cayley table must be square")
        if any(not 0 <= v < size for row in table for v in row):
            raise NotAssociative("Cayley table entries must be element indices")
        if not is_associative(np.array(table, dtype=np.int32)):
            raise NotAssociative(f"{self.name} is not associative")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != size:
                raise NotAssociative(f"Expected {size} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_array(cls, array: np.ndarray, labels: Optional[Sequence[str]] = None, name: str = "S") -> "SemigroupTable":
        return cls(tuple(tuple(int(v) for v in row) for row in array), tuple(labels) if labels is not None else None, name)

    @property
    def size(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int32)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, k: int) -> int:
        result = x
        for _ in range(k - 1):
            result = self.table[result][x]
        return result

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index_of(self, label: str) -> int:
        if self.labels and label in self.labels:
            return self.labels.index(label)
        if label.isdigit() and int(label) < self.size:
            return int(label)
        raise KeyError(f"{label!r} is not an element of {self.name}")

    def __repr__(self) -> str:
        return f"SemigroupTable({self.name}, size={self.size})"
