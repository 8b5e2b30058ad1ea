"""
Partial semigroup maps grown by constraint propagation.

Assigning x -> y also forces x∗z -> y∗ψ(z) and z∗x -> ψ(z)∗y for every
already assigned z. A trail of assigned elements allows cheap undo when the
search backtracks.
"""

from typing import List, Optional, Sequence, Tuple

from structure import SemigroupTable

Profile = Tuple[bool, int, int, int, int]


def profile(s: SemigroupTable, x: int) -> Profile:
    """Isomorphism invariants of x: idempotency, index, period, |xS|, |Sx|."""
    seen = {}
    k, y = 1, x
    while y not in seen:
        seen[y] = k
        y = s.table[y][x]
        k += 1
    index = seen[y]
    return (
        s.table[x][x] == x,
        index,
        k - index,
        len(set(s.table[x])),
        len({s.table[z][x] for z in range(s.size)}),
    )


class PartialMorphism:
    def __init__(self, source: SemigroupTable, target: SemigroupTable):
        self.source = source
        self.target = target
        self.images: List[Optional[int]] = [None] * source.size
        self.used = [False] * target.size
        self.trail: List[int] = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x = self.trail.pop()
            self.used[self.images[x]] = False
            self.images[x] = None

    def assign(self, x: int, y: int) -> bool:
        """Assign x -> y with propagation; on False the caller must undo to its mark."""
        s, t = self.source.table, self.target.table
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            current = self.images[x]
            if current is not None:
                if current != y:
                    return False
                continue
            if self.used[y]:
                return False
            self.images[x] = y
            self.used[y] = True
            self.trail.append(x)
            for z in tuple(self.trail):
                w = self.images[z]
                stack.append((s[x][z], t[y][w]))
                stack.append((s[z][x], t[w][y]))
        return True

    def assign_all(self, pairs: Sequence[Tuple[int, int]]) -> bool:
        return all(self.assign(x, y) for x, y in pairs)

    def is_complete(self) -> bool:
        return len(self.trail) == self.source.size

    def permutation(self) -> Tuple[int, ...]:
        if not self.is_complete():
            raise ValueError("Partial morphism is not total yet")
        return tuple(self.images)
