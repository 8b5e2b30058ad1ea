from typing import Union

from groups import FiniteGroup, make_cyclic

from .table import SemigroupTable


def adjoin_zero(s: Union[SemigroupTable, FiniteGroup], zero_label: str = "0") -> SemigroupTable:
    """S ∪ {0} with the new zero stored at index |S|."""
    size = s.size
    rows = [tuple(s.table[x]) + (size,) for x in range(size)]
    rows.append((size,) * (size + 1))
    labels = tuple(s.label(x) for x in range(size)) + (zero_label,)
    return SemigroupTable(tuple(rows), labels, f"{s.name}⁰")


def root_semigroup(k: int) -> SemigroupTable:
    """The multiplicative semigroup {z in ℂ : z**k = z}, i.e. C_(k-1) with a zero.

    Index j < k-1 stands for exp(2πij/(k-1)).
    """
    if k < 2:
        raise ValueError(f"Root semigroups need k >= 2, got {k}")
    roots = make_cyclic(k - 1)
    labels = ["1"] + [f"ζ^{j}" for j in range(1, k - 1)]
    s = adjoin_zero(roots.with_labels(labels))
    return SemigroupTable(s.table, s.labels, f"R{k}")
