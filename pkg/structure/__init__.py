"""
Structural analysis of finite semigroups and of λ(G) under translations.
"""

from .analysis import (
    IdempotentPoset,
    idempotent_poset,
    idempotent_roots,
    idempotents,
    is_ideal,
    maximal_ideal,
    principal_ideal,
    sqrt_set,
    zero_element,
)
from .constructions import adjoin_zero, root_semigroup
from .errors import (
    NameResolutionFailure,
    NotAGroupAction,
    NotASemilattice,
    NotAssociative,
    NotCentral,
    SearchTooLarge,
)
from .orbits import (
    TRANSVERSAL_SEARCH_LIMIT,
    check_central,
    find_transversal_semigroups,
    orbit_projection,
    orbit_representatives,
    orbit_semigroup,
    translation_orbits,
    verify_transversal,
)
from .t17 import DISPLAYED_COLUMNS, THETA_GAMMA, T17Table, build_T17, expected_entries, render
from .table import EXHAUSTIVE_LIMIT, SemigroupTable, is_associative

__all__ = [
    "DISPLAYED_COLUMNS",
    "EXHAUSTIVE_LIMIT",
    "THETA_GAMMA",
    "TRANSVERSAL_SEARCH_LIMIT",
    "IdempotentPoset",
    "NameResolutionFailure",
    "NotAGroupAction",
    "NotASemilattice",
    "NotAssociative",
    "NotCentral",
    "SearchTooLarge",
    "SemigroupTable",
    "T17Table",
    "adjoin_zero",
    "build_T17",
    "check_central",
    "expected_entries",
    "find_transversal_semigroups",
    "idempotent_poset",
    "idempotent_roots",
    "idempotents",
    "is_associative",
    "is_ideal",
    "maximal_ideal",
    "orbit_projection",
    "orbit_representatives",
    "orbit_semigroup",
    "principal_ideal",
    "render",
    "root_semigroup",
    "sqrt_set",
    "translation_orbits",
    "verify_transversal",
]
