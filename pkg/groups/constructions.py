"""
Standard group constructions.
"""

from itertools import permutations, product
from typing import Callable, Hashable, Optional, Sequence

from .errors import NotAGroup, OrderTooLarge
from .group import MAX_GROUP_ORDER, FiniteGroup
from .morphism import automorphisms

MAX_SYMMETRIC_DEGREE = 5


def group_from_elements(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    name: str = "G",
    labels: Optional[Sequence[str]] = None,
) -> FiniteGroup:
    """Tabulate `mul` on `elements`, which must be closed under it."""
    index = {element: i for i, element in enumerate(elements)}
    if len(index) != len(elements):
        raise NotAGroup("Elements must be distinct")
    if len(index) > MAX_GROUP_ORDER:
        raise OrderTooLarge(f"{name} would have order {len(index)}")
    try:
        table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    except KeyError as e:
        raise NotAGroup(f"{name} is not closed under its operation: {e}") from e
    return FiniteGroup(table, name, tuple(labels) if labels is not None else None)


def make_cyclic(n: int) -> FiniteGroup:
    """Z/n with element i the residue i."""
    if not isinstance(n, int) or n < 1:
        raise NotAGroup(f"Cyclic group needs n >= 1, got {n!r}")
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product, pair (a, b) stored at index a*|h| + b."""
    k = h.m
    table = tuple(
        tuple(g.table[a][c] * k + h.table[b][d] for c in range(g.m) for d in range(k))
        for a in range(g.m)
        for b in range(k)
    )
    labels = None
    if g.labels or h.labels:
        labels = tuple(f"({g.label(a)},{h.label(b)})" for a in range(g.m) for b in range(k))
    return FiniteGroup(table, f"{g.name}x{h.name}", labels)


def compose_permutations(p: Sequence[int], q: Sequence[int]) -> tuple:
    """p after q."""
    return tuple(p[x] for x in q)


def symmetric(k: int) -> FiniteGroup:
    if not 1 <= k <= MAX_SYMMETRIC_DEGREE:
        raise OrderTooLarge(f"Symmetric groups are built for 1 <= k <= {MAX_SYMMETRIC_DEGREE}, got {k}")
    elements = list(permutations(range(k)))
    return group_from_elements(elements, compose_permutations, f"S{k}")


def alternating4() -> FiniteGroup:
    def even(p):
        return sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0

    return group_from_elements([p for p in permutations(range(4)) if even(p)], compose_permutations, "A4")


def dihedral(k: int) -> FiniteGroup:
    """Symmetries of a k-gon (order 2k) as maps x -> (-1)**s * x + r on Z/k."""
    if k < 1:
        raise NotAGroup(f"Dihedral group needs k >= 1, got {k}")

    def mul(a, b):
        (r1, s1), (r2, s2) = a, b
        return (r1 + (-r2 if s1 else r2)) % k, s1 ^ s2

    return group_from_elements(list(product(range(k), (0, 1))), mul, f"D{k}")


def quaternion() -> FiniteGroup:
    """The units ±1, ±i, ±j, ±k of the Hamilton quaternions."""

    def mul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    units = []
    for axis in range(4):
        for sign in (1, -1):
            unit = [0, 0, 0, 0]
            unit[axis] = sign
            units.append(tuple(unit))
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return group_from_elements(units, mul, "Q8", labels)


def holomorph(g: FiniteGroup) -> FiniteGroup:
    """
    Hol(g) on pairs (x, f) with (x, f)*(y, h) = (x f(y), f∘h).

    Pair (x, f) sits at index x*|Aut(g)| + (position of f in automorphisms(g)).
    """
    auts = [f.images for f in automorphisms(g)]
    order = g.m * len(auts)
    if order > MAX_GROUP_ORDER:
        raise OrderTooLarge(f"Hol({g.name}) would have order {order} > {MAX_GROUP_ORDER}")

    def mul(a, b):
        (x, f), (y, h) = a, b
        return g.table[x][f[y]], compose_permutations(f, h)

    elements = [(x, f) for x in range(g.m) for f in auts]
    return group_from_elements(elements, mul, f"Hol({g.name})")
