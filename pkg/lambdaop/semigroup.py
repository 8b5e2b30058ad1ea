"""
The superextension λ(S) of a small semigroup as an explicit Cayley table.
"""

import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from groups import OrderTooLarge, check_associative
from lambdaenum import enumerate_bits
from setfam import GroundSet, MaxLinkedFamily, principal

from .element import Home, LambdaElement, ground_of, quotient_masks
from .errors import NotMaximal
from .named import GENERATORS, SCALED, notation_key, translate_label
from .operation import affine_image

MAX_LAMBDA_HOME = 5


@dataclass(frozen=True, eq=False)
class LambdaSemigroup:
    """
    λ(home) with elements in ascending bit-vector order.

    `table[i][j]` is the index of elements[i] ∗ elements[j]; `principal_index[x]`
    is the index of the principal family ⟨{x}⟩.
    """

    home: Home
    elements: Tuple[LambdaElement, ...]
    table: Tuple[Tuple[int, ...], ...]
    principal_index: Tuple[int, ...]
    labels: Tuple[str, ...]
    named: Dict[str, int] = field(default_factory=dict)

    @property
    def group(self) -> Home:
        return self.home

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def name(self) -> str:
        return f"λ({self.home.name})"

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int32)

    @cached_property
    def _position(self) -> Dict[int, int]:
        return {e.bits: i for i, e in enumerate(self.elements)}

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, item: Union[int, str, LambdaElement, MaxLinkedFamily]) -> int:
        """Index of an element given by position, label, element or family."""
        if isinstance(item, int):
            if not 0 <= item < self.size:
                raise IndexError(f"{item} is not an index of {self.name}")
            return item
        if isinstance(item, str):
            if item in self.named:
                return self.named[item]
            if item in self.labels:
                return self.labels.index(item)
            raise KeyError(f"No element of {self.name} is called {item!r}")
        bits = item.bits
        if bits not in self._position:
            raise KeyError(f"{item!r} is not an element of {self.name}")
        return self._position[bits]

    def translate(self, i: int, b: int) -> int:
        """Index of principal(b) ∗ elements[i]."""
        return self.table[self.principal_index[b]][i]

    def affine(self, a: int, b: int, i: int) -> int:
        return self.index_of(affine_image(a, b, self.elements[i]))

    @cached_property
    def semigroup(self):
        from structure import SemigroupTable

        return SemigroupTable(self.table, self.labels, self.name)


def lambda_table(home: Home, bits: List[int]) -> np.ndarray:
    """
    Cayley table of λ(home) for the sorted bit-vectors `bits`.

    member[e, C] says C is in family e. For every b and C the selector
    {s : C/s in b} is packed into an int, so member[a, selector[b, C]]
    decides C in a∗b for all a, b, C at once.
    """
    n = home.size
    width = 1 << n
    member = np.array([[bits_e >> c & 1 for c in range(width)] for bits_e in bits], dtype=bool)
    quot = quotient_masks(home)
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    selector = (member[:, quot] * weights).sum(axis=2)
    products = member[:, selector]

    place = np.uint64(1) << np.arange(width, dtype=np.uint64)
    keys = (products * place).sum(axis=2, dtype=np.uint64)
    known = np.array(bits, dtype=np.uint64)
    index = np.searchsorted(known, keys)
    index = np.minimum(index, len(bits) - 1)
    if not np.array_equal(known[index], keys):
        raise NotMaximal(f"Some product on {home.name} is not among the maximal linked families")
    return index.astype(np.int32)


def _labels(home: Home, elements: List[LambdaElement], table: np.ndarray, principal_index: List[int], named: Dict[str, int]) -> List[Optional[str]]:
    labels: List[Optional[str]] = [None] * len(elements)
    for name, i in named.items():
        labels[i] = labels[i] or name
    for x, i in enumerate(principal_index):
        labels[i] = labels[i] or home.label(x)
    identity = getattr(home, "identity", None)
    for name, i in named.items():
        for b, p in enumerate(principal_index):
            if b == identity:
                continue
            j = int(table[p, i])
            if labels[j] is None:
                labels[j] = translate_label(home, name, b)
    return [label or f"M{i}" for i, label in enumerate(labels)]


def _resolve_names(home: Home, elements: List[LambdaElement], position: Dict[int, int]) -> Dict[str, int]:
    key = notation_key(home)
    if key is None:
        return {}
    ground = ground_of(home)
    # generator lists are written with element indices, whatever the labels
    indices = GroundSet(home.size)
    named: Dict[str, int] = {}
    for name, generators in GENERATORS[key].items():
        family = MaxLinkedFamily.from_generators([indices.parse_mask(text) for text in generators], ground)
        named[name] = position[family.bits]
    for name, (a, source) in SCALED.get(key, {}).items():
        named[name] = position[affine_image(a, 0, elements[named[source]]).bits]
    return named


def build_lambda(home: Home) -> LambdaSemigroup:
    """
    λ(home) with its full Cayley table.

    Raises:
        OrderTooLarge: the home has more than five elements
        NotMaximal: a product falls outside the enumerated families
    """
    from structure.errors import NotAssociative

    n = home.size
    if n > MAX_LAMBDA_HOME:
        raise OrderTooLarge(f"λ({home.name}) is built for orders up to {MAX_LAMBDA_HOME}, got {n}")
    started = time.perf_counter()
    ground = ground_of(home)
    bits = enumerate_bits(n)
    elements = [LambdaElement(MaxLinkedFamily(ground, b), home) for b in bits]
    position = {b: i for i, b in enumerate(bits)}

    table = lambda_table(home, bits)
    if not check_associative(table):
        raise NotAssociative(f"λ({home.name}) table is not associative")

    principal_index = [position[principal(ground, x).bits] for x in range(n)]
    named = _resolve_names(home, elements, position)
    labels = _labels(home, elements, table, principal_index, named)
    logger.info(f"Built λ({home.name}) with {len(elements)} elements in {time.perf_counter() - started:.2f}s")
    return LambdaSemigroup(
        home=home,
        elements=tuple(elements),
        table=tuple(tuple(int(v) for v in row) for row in table),
        principal_index=tuple(principal_index),
        labels=tuple(labels),
        named=named,
    )
