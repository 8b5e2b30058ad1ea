"""
Automorphisms and isomorphisms of finite semigroups and superextensions.
"""

from .errors import NotAnAutomorphism
from .holomorph import (
    HolomorphRepresentation,
    RestrictionReport,
    holomorph_automorphism,
    holomorph_representation,
    restriction_epimorphism,
)
from .partial import PartialMorphism, profile
from .search import (
    GENERIC_LIMIT,
    SEEDED_LIMIT,
    AutGroup,
    automorphisms_generic,
    automorphisms_seeded,
    compose,
    is_isomorphism,
    isomorphisms_generic,
    isomorphisms_seeded,
    lambda_isomorphism,
    lambda_of_map,
    lifted_automorphisms,
    semigroup_isomorphic,
)

__all__ = [
    "GENERIC_LIMIT",
    "SEEDED_LIMIT",
    "AutGroup",
    "HolomorphRepresentation",
    "NotAnAutomorphism",
    "PartialMorphism",
    "RestrictionReport",
    "automorphisms_generic",
    "automorphisms_seeded",
    "compose",
    "holomorph_automorphism",
    "holomorph_representation",
    "is_isomorphism",
    "isomorphisms_generic",
    "isomorphisms_seeded",
    "lambda_isomorphism",
    "lambda_of_map",
    "lifted_automorphisms",
    "profile",
    "restriction_epimorphism",
    "semigroup_isomorphic",
]
