"""
Left translation orbits of λ(G) and the orbit semigroup λ(G)/G.
"""

from itertools import product
from typing import TYPE_CHECKING, List, Sequence, Tuple

from loguru import logger

from .errors import NotAGroupAction, NotCentral, SearchTooLarge
from .table import SemigroupTable

if TYPE_CHECKING:
    from lambdaop import LambdaSemigroup

TRANSVERSAL_SEARCH_LIMIT = 3


def translation_orbits(L: "LambdaSemigroup") -> List[Tuple[int, ...]]:
    """Orbits {g∗x : g in G}, each sorted, ordered by their least element."""
    home = L.home
    identity = getattr(home, "identity", None)
    if identity is not None and any(L.translate(x, identity) != x for x in range(L.size)):
        raise NotAGroupAction("The identity of the acting group does not act trivially")
    seen = set()
    orbits = []
    for x in range(L.size):
        if x in seen:
            continue
        orbit = tuple(sorted({L.translate(x, b) for b in range(home.size)}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def orbit_projection(L: "LambdaSemigroup") -> List[int]:
    """Index of the orbit containing each element."""
    projection = [0] * L.size
    for k, orbit in enumerate(translation_orbits(L)):
        for x in orbit:
            projection[x] = k
    return projection


def orbit_representatives(L: "LambdaSemigroup") -> List[int]:
    """A named element (or the identity) of each orbit when one exists, else its least element."""
    preferred = list(L.named.values())
    identity = getattr(L.home, "identity", None)
    if identity is not None:
        preferred.append(L.principal_index[identity])
    reps = []
    for orbit in translation_orbits(L):
        in_orbit = [x for x in preferred if x in orbit]
        reps.append(in_orbit[0] if in_orbit else orbit[0])
    return reps


def check_central(L: "LambdaSemigroup") -> None:
    for p in L.principal_index:
        for x in range(L.size):
            if L.mul(p, x) != L.mul(x, p):
                raise NotCentral(f"{L.label(p)} does not commute with {L.label(x)}")


def orbit_semigroup(L: "LambdaSemigroup") -> SemigroupTable:
    """
    λ(G)/G with [x]∗[y] = [x∗y].

    Raises:
        NotCentral: G is not central, or the induced product is ill defined
    """
    check_central(L)
    orbits = translation_orbits(L)
    projection = orbit_projection(L)
    table = []
    for a in orbits:
        row = []
        for b in orbits:
            results = {projection[L.mul(x, y)] for x in a for y in b}
            if len(results) != 1:
                raise NotCentral("Orbit product is not well defined")
            row.append(results.pop())
        table.append(tuple(row))
    labels = tuple(f"[{L.label(rep)}]" for rep in orbit_representatives(L))
    return SemigroupTable(tuple(table), labels, f"{L.name}/{L.home.name}")


def verify_transversal(L: "LambdaSemigroup", t: Sequence[int]) -> bool:
    """True iff t is a subsemigroup meeting every orbit once, mapped isomorphically onto λ(G)/G."""
    members = set(t)
    if not members:
        return False
    projection = orbit_projection(L)
    if sorted(projection[x] for x in members) != list(range(len(translation_orbits(L)))):
        return False
    if any(L.mul(x, y) not in members for x in members for y in members):
        return False
    quotient = orbit_semigroup(L)
    return all(projection[L.mul(x, y)] == quotient.mul(projection[x], projection[y]) for x in members for y in members)


def find_transversal_semigroups(L: "LambdaSemigroup") -> List[Tuple[int, ...]]:
    """All transversal semigroups, for at most three orbits."""
    orbits = translation_orbits(L)
    if len(orbits) > TRANSVERSAL_SEARCH_LIMIT:
        raise SearchTooLarge(f"{L.name} has {len(orbits)} orbits; the search handles {TRANSVERSAL_SEARCH_LIMIT}")
    found = [tuple(sorted(choice)) for choice in product(*orbits) if verify_transversal(L, choice)]
    logger.debug(f"{L.name} has {len(found)} transversal semigroups")
    return found
