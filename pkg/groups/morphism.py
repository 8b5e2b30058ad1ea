"""
Isomorphism and automorphism search between Cayley-table groups.

Candidate maps are fixed by the images of a generating set of the source.
Images are chosen with matching element orders and extended along the
right-multiplication edges of the Cayley graph; an extension that stays
consistent and injective on the whole group is an isomorphism.
"""

from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence

from loguru import logger

from .errors import OrderTooLarge
from .group import FiniteGroup, GroupMap

MAX_SEARCH_ORDER = 100


def _check_order(g: FiniteGroup) -> None:
    if g.m > MAX_SEARCH_ORDER:
        raise OrderTooLarge(f"Isomorphism search is limited to order {MAX_SEARCH_ORDER}, {g.name} has order {g.m}")


def _extend(g: FiniteGroup, h: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[Dict[int, int]]:
    mapping = {g.identity: h.identity}
    used = {h.identity}
    frontier = [g.identity]
    for x in frontier:
        y = mapping[x]
        for s, t in zip(gens, images):
            xs, yt = g.table[x][s], h.table[y][t]
            if xs in mapping:
                if mapping[xs] != yt:
                    return None
            elif yt in used:
                return None
            else:
                mapping[xs] = yt
                used.add(yt)
                frontier.append(xs)
    return mapping


def same_invariants(g: FiniteGroup, h: FiniteGroup) -> bool:
    return g.m == h.m and Counter(g.element_orders) == Counter(h.element_orders) and g.is_abelian() == h.is_abelian()


def isomorphisms(g: FiniteGroup, h: FiniteGroup) -> Iterator[GroupMap]:
    """Yield every isomorphism g -> h."""
    _check_order(g)
    _check_order(h)
    if not same_invariants(g, h):
        return
    gens = g.generating_set
    candidates = [[y for y in range(h.m) if h.element_orders[y] == g.element_orders[s]] for s in gens]

    def search(images: List[int]) -> Iterator[GroupMap]:
        mapping = _extend(g, h, gens[:len(images)], images)
        if mapping is None:
            return
        if len(images) == len(gens):
            if len(mapping) == g.m:
                yield GroupMap(g, h, tuple(mapping[x] for x in range(g.m)))
            return
        for y in candidates[len(images)]:
            yield from search(images + [y])

    yield from search([])


def automorphisms(g: FiniteGroup) -> List[GroupMap]:
    """
    The full automorphism group of `g`.

    Returns:
        Automorphisms sorted by their image tuples, so the identity comes first
    """
    found = sorted(isomorphisms(g, g), key=lambda f: f.images)
    logger.debug(f"|Aut({g.name})| = {len(found)}")
    return found


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> Optional[GroupMap]:
    """A witness isomorphism g -> h, or None."""
    return next(isomorphisms(g, h), None)
