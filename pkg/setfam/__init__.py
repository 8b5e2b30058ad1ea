"""
Bit-level subsets, set families and the maximal-linked predicates.
"""

from .errors import (
    CharacterizationMismatch,
    EmptyBaseSet,
    GroundSetError,
    MaskOutOfRange,
    NotMaximalLinked,
    NotUpwardClosed,
)
from .family import (
    Family,
    MaxLinkedFamily,
    byte_width,
    is_linked,
    is_maximal_linked,
    minimal_sets,
    principal,
    up_closure,
)
from .masks import (
    MAX_ENUM_GROUND,
    MAX_FAMILY_GROUND,
    GroundSet,
    all_masks,
    canonical_order,
    elements,
    iter_bits,
    mirror_bits,
    up_close_bits,
)

__all__ = [
    'GroundSet', 'Family', 'MaxLinkedFamily',
    'up_closure', 'is_linked', 'is_maximal_linked', 'minimal_sets', 'principal',
    'byte_width', 'all_masks', 'canonical_order', 'elements',
    'iter_bits', 'mirror_bits', 'up_close_bits',
    'MAX_ENUM_GROUND', 'MAX_FAMILY_GROUND',
    'GroundSetError', 'EmptyBaseSet', 'MaskOutOfRange', 'NotUpwardClosed',
    'NotMaximalLinked', 'CharacterizationMismatch',
]
