"""
Automorphism and isomorphism search for finite semigroups and for λ(G).
"""

import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from loguru import logger

from groups import FiniteGroup, GroupMap, OrderTooLarge, automorphisms, identify, isomorphisms
from groups.catalog import IDENTIFY_LIMIT
from lambdaop import LambdaSemigroup, ground_of, lambda_map
from structure import SemigroupTable, idempotent_poset, idempotents, translation_orbits

from .errors import NotAnAutomorphism
from .partial import PartialMorphism, profile

GENERIC_LIMIT = 16
SEEDED_LIMIT = 100

Permutation = Tuple[int, ...]


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """p after q."""
    return tuple(p[x] for x in q)


def is_isomorphism(s: SemigroupTable, t: SemigroupTable, images: Sequence[int]) -> bool:
    if len(images) != s.size or s.size != t.size or len(set(images)) != s.size:
        return False
    return all(images[s.table[x][y]] == t.table[images[x]][images[y]] for x in range(s.size) for y in range(s.size))


@dataclass(frozen=True, eq=False)
class AutGroup:
    """Automorphisms as index permutations, sorted, under (p∘q)[x] = p[q[x]]."""

    carrier: Tuple[Permutation, ...]
    name: str = "S"
    table: Tuple[Tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        carrier = tuple(sorted(set(self.carrier)))
        position = {p: i for i, p in enumerate(carrier)}
        try:
            table = tuple(tuple(position[compose(p, q)] for q in carrier) for p in carrier)
        except KeyError as e:
            raise NotAnAutomorphism(f"Automorphisms of {self.name} are not closed under composition") from e
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return len(self.carrier)

    def index_of(self, p: Sequence[int]) -> int:
        return self.carrier.index(tuple(p))

    @cached_property
    def as_group(self) -> FiniteGroup:
        return FiniteGroup(self.table, f"Aut({self.name})")

    @cached_property
    def identified_name(self) -> str:
        return identify(self.as_group) if self.order <= IDENTIFY_LIMIT else "unknown"


def _as_table(s: Union[SemigroupTable, LambdaSemigroup]) -> SemigroupTable:
    return s.semigroup if isinstance(s, LambdaSemigroup) else s


def _backtrack(pm: PartialMorphism, order: Sequence[int], candidates: Dict[int, List[int]], pos: int = 0) -> Iterator[Permutation]:
    while pos < len(order) and pm.images[order[pos]] is not None:
        pos += 1
    if pos == len(order):
        if pm.is_complete():
            yield pm.permutation()
        return
    x = order[pos]
    for y in candidates[x]:
        if pm.used[y]:
            continue
        mark = pm.mark()
        if pm.assign(x, y):
            yield from _backtrack(pm, order, candidates, pos + 1)
        pm.undo(mark)


def _candidates(s: SemigroupTable, t: SemigroupTable, exclude: Sequence[int] = ()) -> Optional[Dict[int, List[int]]]:
    source_profiles = [profile(s, x) for x in range(s.size)]
    target_profiles = [profile(t, y) for y in range(t.size)]
    if sorted(source_profiles) != sorted(target_profiles):
        return None
    banned = set(exclude)
    return {
        x: [y for y in range(t.size) if target_profiles[y] == source_profiles[x] and y not in banned]
        for x in range(s.size)
    }


def _generic_order(s: SemigroupTable) -> List[int]:
    es = set(idempotents(s))
    return sorted(range(s.size), key=lambda x: (x not in es, x))


def isomorphisms_generic(s: SemigroupTable, t: SemigroupTable) -> Iterator[Permutation]:
    """Every isomorphism s -> t by unseeded backtracking."""
    for table in (s, t):
        if table.size > GENERIC_LIMIT:
            raise OrderTooLarge(f"Generic search is limited to {GENERIC_LIMIT} elements, {table.name} has {table.size}")
    if s.size != t.size:
        return
    candidates = _candidates(s, t)
    if candidates is None:
        return
    yield from _backtrack(PartialMorphism(s, t), _generic_order(s), candidates)


def automorphisms_generic(s: Union[SemigroupTable, LambdaSemigroup]) -> AutGroup:
    table = _as_table(s)
    return AutGroup(tuple(isomorphisms_generic(table, table)), table.name)


def _seeded_order(L: LambdaSemigroup) -> List[int]:
    """Idempotents by height in their order, then the rest by decreasing orbit size."""
    s = L.semigroup
    poset = idempotent_poset(s)
    height = {e: sum(1 for f in poset.elements if poset.leq(f, e)) for e in poset.elements}
    orbit_size = {}
    for orbit in translation_orbits(L):
        for x in orbit:
            orbit_size[x] = len(orbit)
    principal = set(L.principal_index)
    rest = [x for x in range(L.size) if x not in height and x not in principal]
    return sorted(height, key=lambda e: (height[e], e)) + sorted(rest, key=lambda x: (-orbit_size[x], x))


def isomorphisms_seeded(L: LambdaSemigroup, M: LambdaSemigroup) -> Iterator[Permutation]:
    """
    Every isomorphism λ(G) -> λ(H).

    Units go to units, so each isomorphism restricts to a group isomorphism
    G -> H on the principal elements; each such restriction seeds one branch.
    """
    for side in (L, M):
        if side.size > SEEDED_LIMIT:
            raise OrderTooLarge(f"Seeded search is limited to {SEEDED_LIMIT} elements, {side.name} has {side.size}")
    if L.size != M.size or L.home.size != M.home.size:
        return
    s, t = L.semigroup, M.semigroup
    candidates = _candidates(s, t, exclude=M.principal_index)
    if candidates is None:
        return
    order = _seeded_order(L)
    for phi in isomorphisms(L.home, M.home):
        pm = PartialMorphism(s, t)
        seeds = [(L.principal_index[x], M.principal_index[phi(x)]) for x in range(L.home.size)]
        if not pm.assign_all(seeds):
            continue
        yield from _backtrack(pm, order, candidates)


def automorphisms_seeded(L: LambdaSemigroup) -> AutGroup:
    started = time.perf_counter()
    found = AutGroup(tuple(isomorphisms_seeded(L, L)), L.name)
    logger.info(f"|Aut({L.name})| = {found.order} found in {time.perf_counter() - started:.2f}s")
    return found


def semigroup_isomorphic(
    s: Union[SemigroupTable, LambdaSemigroup], t: Union[SemigroupTable, LambdaSemigroup]
) -> Optional[Permutation]:
    """A witness isomorphism s -> t, or None; seeded when both sides are superextensions."""
    if isinstance(s, LambdaSemigroup) and isinstance(t, LambdaSemigroup):
        return next(isomorphisms_seeded(s, t), None)
    return next(isomorphisms_generic(_as_table(s), _as_table(t)), None)


def lambda_of_map(phi: GroupMap, L: LambdaSemigroup, M: Optional[LambdaSemigroup] = None) -> Permutation:
    """
    The permutation induced on λ by a group isomorphism.

    Raises:
        NotAnAutomorphism: the induced map fails to be a semigroup isomorphism
    """
    M = M or L
    if phi.source is not L.home or phi.target is not M.home:
        raise NotAnAutomorphism("Map does not connect the homes of the given superextensions")
    target = ground_of(M.home)
    images = tuple(M.index_of(lambda_map(phi.images, e.family, target)) for e in L.elements)
    if not is_isomorphism(L.semigroup, M.semigroup, images):
        raise NotAnAutomorphism(f"λφ is not an isomorphism {L.name} -> {M.name}")
    return images


def lambda_isomorphism(phi: GroupMap, L: LambdaSemigroup, M: LambdaSemigroup) -> Permutation:
    """Lift a group isomorphism G -> H to λ(G) -> λ(H)."""
    if not phi.is_bijective() or not phi.is_homomorphism():
        raise NotAnAutomorphism("Only group isomorphisms lift to isomorphisms of superextensions")
    return lambda_of_map(phi, L, M)


def lifted_automorphisms(L: LambdaSemigroup) -> List[Permutation]:
    return [lambda_of_map(phi, L) for phi in automorphisms(L.home)]
