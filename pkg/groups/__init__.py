"""
Finite groups as Cayley tables, their maps, constructions and catalog.
"""

from .catalog import IDENTIFY_LIMIT, fingerprint, group_from_spec, identify
from .constructions import (
    MAX_SYMMETRIC_DEGREE,
    alternating4,
    compose_permutations,
    dihedral,
    direct_product,
    group_from_elements,
    holomorph,
    make_cyclic,
    quaternion,
    symmetric,
)
from .errors import NotAGroup, OrderTooLarge, UnknownGroupSpec
from .group import MAX_GROUP_ORDER, FiniteGroup, GroupMap, check_associative, identity_map
from .morphism import MAX_SEARCH_ORDER, automorphisms, is_isomorphic, isomorphisms, same_invariants

__all__ = [
    "IDENTIFY_LIMIT",
    "MAX_GROUP_ORDER",
    "MAX_SEARCH_ORDER",
    "MAX_SYMMETRIC_DEGREE",
    "FiniteGroup",
    "GroupMap",
    "NotAGroup",
    "OrderTooLarge",
    "UnknownGroupSpec",
    "alternating4",
    "automorphisms",
    "check_associative",
    "compose_permutations",
    "dihedral",
    "direct_product",
    "fingerprint",
    "group_from_elements",
    "group_from_spec",
    "holomorph",
    "identify",
    "identity_map",
    "is_isomorphic",
    "isomorphisms",
    "make_cyclic",
    "quaternion",
    "same_invariants",
    "symmetric",
]
