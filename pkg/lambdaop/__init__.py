"""
The superextension operation on maximal linked families and λ(S) tables.
"""

from .element import Home, LambdaElement, element, ground_of, quotient_masks
from .errors import GroundMismatch, NotAUnit, NotMaximal
from .named import GENERATORS, GROUP_LABELS, SCALED, T17_NAMES, labelled_group, notation_key, translate_label
from .operation import (
    ORACLE_LIMIT,
    affine_image,
    image_mask,
    lambda_map,
    left_translate,
    product,
    product_bits,
    product_oracle,
)
from .semigroup import MAX_LAMBDA_HOME, LambdaSemigroup, build_lambda, lambda_table

__all__ = [
    "GENERATORS",
    "GROUP_LABELS",
    "MAX_LAMBDA_HOME",
    "ORACLE_LIMIT",
    "SCALED",
    "T17_NAMES",
    "GroundMismatch",
    "Home",
    "LambdaElement",
    "LambdaSemigroup",
    "NotAUnit",
    "NotMaximal",
    "affine_image",
    "build_lambda",
    "element",
    "ground_of",
    "image_mask",
    "labelled_group",
    "lambda_map",
    "lambda_table",
    "left_translate",
    "notation_key",
    "product",
    "product_bits",
    "product_oracle",
    "quotient_masks",
    "translate_label",
]
