"""
Named small groups: parsing short descriptions and identifying tables.
"""

import re
from collections import Counter
from functools import lru_cache, reduce
from typing import List, Tuple

from .constructions import alternating4, dihedral, direct_product, make_cyclic, quaternion, symmetric
from .errors import UnknownGroupSpec
from .group import FiniteGroup
from .morphism import is_isomorphic

IDENTIFY_LIMIT = 24

_FACTOR = re.compile(r"^(c|s|d)(\d+)$")


def _factor(text: str) -> FiniteGroup:
    if text == "q8":
        return quaternion()
    if text == "a4":
        return alternating4()
    match = _FACTOR.match(text)
    if not match:
        raise UnknownGroupSpec(f"Unknown group {text!r}; expected c<n>, s<k>, d<k>, q8 or a4")
    kind, size = match.group(1), int(match.group(2))
    if size < 1:
        raise UnknownGroupSpec(f"Group size must be positive in {text!r}")
    if kind == "c":
        return make_cyclic(size)
    if kind == "s":
        return symmetric(size)
    return dihedral(size)


def group_from_spec(text: str) -> FiniteGroup:
    """
    Build a group from a short description.

    Args:
        text: `c5`, `s4`, `d4`, `q8`, `a4`, or a direct product such as `c2xc2`

    Returns:
        The group; direct products are named by joining factor names with x
    """
    parts = [part.strip() for part in text.strip().lower().split("x")]
    if not all(parts):
        raise UnknownGroupSpec(f"Malformed group description {text!r}")
    return reduce(direct_product, [_factor(part) for part in parts])


def fingerprint(g: FiniteGroup) -> Tuple:
    return g.m, g.is_abelian(), tuple(sorted(Counter(g.element_orders).items()))


@lru_cache(maxsize=None)
def _catalog() -> List[Tuple[str, FiniteGroup]]:
    """Non-cyclic groups distinguished by name in reports."""
    c2 = make_cyclic(2)
    return [
        ("C2xC2", direct_product(c2, c2)),
        ("S3", symmetric(3)),
        ("C2xC4", direct_product(c2, make_cyclic(4))),
        ("C2xC2xC2", direct_product(direct_product(c2, c2), c2)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("C3xC3", direct_product(make_cyclic(3), make_cyclic(3))),
        ("D5", dihedral(5)),
        ("C2xC6", direct_product(c2, make_cyclic(6))),
        ("A4", alternating4()),
        ("D6", dihedral(6)),
        ("S4", symmetric(4)),
    ]


def identify(g: FiniteGroup) -> str:
    """Catalog name of `g`: C<m> when cyclic, a catalog entry, or "unknown"."""
    if g.m in g.element_orders:
        return f"C{g.m}"
    if g.m > IDENTIFY_LIMIT:
        return "unknown"
    key = fingerprint(g)
    for name, candidate in _catalog():
        if fingerprint(candidate) == key and is_isomorphic(g, candidate) is not None:
            return name
    return "unknown"
