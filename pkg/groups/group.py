"""
Finite groups stored as Cayley tables over the indices 0..m-1.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import NotAGroup, OrderTooLarge

MAX_GROUP_ORDER = 200

Table = Tuple[Tuple[int, ...], ...]


def check_associative(array: np.ndarray) -> bool:
    """Exhaustive associativity test of a square index table."""
    return bool(np.array_equal(array[array, :], array[:, array]))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: Table
    name: str = "G"
    labels: Optional[Tuple[str, ...]] = None
    identity: int = field(init=False)
    inverse: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        m = len(table)
        if m == 0:
            raise NotAGroup("A group needs at least one element")
        if m > MAX_GROUP_ORDER:
            raise OrderTooLarge(f"Order {m} exceeds the table limit of {MAX_GROUP_ORDER}")
        everything = list(range(m))
        for row in table:
            if len(row) != m:
                raise NotAGroup(f"Cayley table must be square, found a row of length {len(row)}")
            if sorted(row) != everything:
                raise NotAGroup("Every row of a group table is a permutation of the elements")
        for j in range(m):
            if sorted(row[j] for row in table) != everything:
                raise NotAGroup("Every column of a group table is a permutation of the elements")

        identities = [e for e in range(m) if list(table[e]) == everything and all(table[x][e] == x for x in range(m))]
        if not identities:
            raise NotAGroup("No two-sided identity")
        identity = identities[0]
        inverse = tuple(table[x].index(identity) for x in range(m))
        if any(table[inverse[x]][x] != identity for x in range(m)):
            raise NotAGroup("Inverses are not two-sided")
        if not check_associative(np.array(table, dtype=np.int32)):
            raise NotAGroup(f"Table of {self.name} is not associative")

        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != m or len(set(labels)) != m:
                raise NotAGroup(f"Expected {m} distinct labels, got {labels}")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "inverse", inverse)

    @property
    def m(self) -> int:
        return len(self.table)

    @property
    def size(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int32)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, k: int) -> int:
        result = self.identity
        for _ in range(k):
            result = self.table[result][x]
        return result

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index_of(self, label: str) -> int:
        if self.labels and label in self.labels:
            return self.labels.index(label)
        if label.isdigit() and int(label) < self.m:
            return int(label)
        raise KeyError(f"{label!r} is not an element of {self.name}")

    def order_of(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        return tuple(self.order_of(x) for x in range(self.m))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.array, self.array.T))

    def generated(self, gens: Iterable[int]) -> Set[int]:
        """The subgroup generated by `gens`."""
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        for x in frontier:
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    @cached_property
    def generating_set(self) -> Tuple[int, ...]:
        """A small generating set, picked greedily by decreasing element order."""
        gens: List[int] = []
        span = {self.identity}
        for x in sorted(range(self.m), key=lambda x: (-self.element_orders[x], x)):
            if x not in span:
                gens.append(x)
                span = self.generated(gens)
            if len(span) == self.m:
                break
        return tuple(gens)

    def is_subgroup(self, elements: Iterable[int]) -> bool:
        subset = set(elements)
        return self.identity in subset and all(self.table[x][self.inverse[y]] in subset for x in subset for y in subset)

    def is_normal(self, elements: Iterable[int]) -> bool:
        subset = set(elements)
        if not self.is_subgroup(subset):
            return False
        return all(self.table[self.table[g][x]][self.inverse[g]] in subset for g in range(self.m) for x in subset)

    def with_labels(self, labels: Sequence[str], name: Optional[str] = None) -> "FiniteGroup":
        return FiniteGroup(self.table, name or self.name, tuple(labels))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.m})"


@dataclass(frozen=True, eq=False)
class GroupMap:
    """A map between groups given by the images of the source elements."""

    source: FiniteGroup
    target: FiniteGroup
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(y) for y in self.images)
        if len(images) != self.source.m or any(not 0 <= y < self.target.m for y in images):
            raise ValueError(f"Images {images} do not define a map {self.source.name} -> {self.target.name}")
        object.__setattr__(self, "images", images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.source is other.source and self.target is other.target and self.images == other.images

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.images))

    def is_homomorphism(self) -> bool:
        s, t, f = self.source.table, self.target.table, self.images
        return all(f[s[x][y]] == t[f[x]][f[y]] for x in range(self.source.m) for y in range(self.source.m))

    def is_bijective(self) -> bool:
        return self.source.m == self.target.m and len(set(self.images)) == self.source.m

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        if other.target is not self.source:
            raise ValueError("Maps are not composable")
        return GroupMap(other.source, self.target, tuple(self.images[y] for y in other.images))

    def inverse(self) -> "GroupMap":
        if not self.is_bijective():
            raise ValueError("Only bijections have inverses")
        back = [0] * self.source.m
        for x, y in enumerate(self.images):
            back[y] = x
        return GroupMap(self.target, self.source, tuple(back))


def identity_map(g: FiniteGroup) -> GroupMap:
    return GroupMap(g, g, tuple(range(g.m)))
