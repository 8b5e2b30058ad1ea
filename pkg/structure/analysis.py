"""
Idempotents, zeros, ideals and square roots of a finite semigroup.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from .errors import NotASemilattice
from .table import SemigroupTable


def idempotents(s: SemigroupTable) -> List[int]:
    return [x for x in range(s.size) if s.table[x][x] == x]


def zero_element(s: SemigroupTable) -> Optional[int]:
    for z in range(s.size):
        if all(s.table[x][z] == z and s.table[z][x] == z for x in range(s.size)):
            return z
    return None


@dataclass(frozen=True)
class IdempotentPoset:
    """Idempotents ordered by e <= f iff e∗f = e."""

    elements: Tuple[int, ...]
    relation: FrozenSet[Tuple[int, int]]

    def leq(self, e: int, f: int) -> bool:
        return (e, f) in self.relation

    def hasse_edges(self) -> List[Tuple[int, int]]:
        """Covering pairs (e, f): e < f with nothing strictly between."""
        edges = []
        for e, f in sorted(self.relation):
            if e == f:
                continue
            if not any(g not in (e, f) and self.leq(e, g) and self.leq(g, f) for g in self.elements):
                edges.append((e, f))
        return edges

    def minimum(self) -> Optional[int]:
        for e in self.elements:
            if all(self.leq(e, f) for f in self.elements):
                return e
        return None

    def maximum(self) -> Optional[int]:
        for f in self.elements:
            if all(self.leq(e, f) for e in self.elements):
                return f
        return None


def idempotent_poset(s: SemigroupTable) -> IdempotentPoset:
    es = idempotents(s)
    for e in es:
        for f in es:
            if s.table[e][f] != s.table[f][e]:
                raise NotASemilattice(f"Idempotents {s.label(e)} and {s.label(f)} do not commute")
    relation = frozenset((e, f) for e in es for f in es if s.table[e][f] == e)
    return IdempotentPoset(tuple(es), relation)


def is_ideal(s: SemigroupTable, subset: Iterable[int]) -> bool:
    """True iff the non-empty `subset` absorbs multiplication from both sides."""
    members = set(subset)
    if not members:
        raise ValueError("An ideal must be non-empty")
    return all(s.table[x][y] in members and s.table[y][x] in members for x in members for y in range(s.size))


def principal_ideal(s: SemigroupTable, x: int) -> Set[int]:
    """S¹xS¹."""
    left = {x} | {s.table[a][x] for a in range(s.size)}
    return left | {s.table[y][b] for y in left for b in range(s.size)}


def maximal_ideal(s: SemigroupTable) -> Optional[Set[int]]:
    """
    The unique maximal proper ideal, if there is one.

    Every proper ideal lies in the union of the proper principal ideals, so
    that union is the answer whenever it is itself proper and non-empty.
    """
    union: Set[int] = set()
    for x in range(s.size):
        ideal = principal_ideal(s, x)
        if len(ideal) < s.size:
            union |= ideal
    if not union or len(union) == s.size:
        return None
    return union


def sqrt_set(s: SemigroupTable, targets: Iterable[int]) -> Set[int]:
    """{x : x∗x in targets}."""
    wanted = set(targets)
    return {x for x in range(s.size) if s.table[x][x] in wanted}


def idempotent_roots(s: SemigroupTable) -> Set[int]:
    """Elements whose square is idempotent, i.e. x⁴ = x²."""
    return {x for x in range(s.size) if s.power(x, 4) == s.power(x, 2)}
