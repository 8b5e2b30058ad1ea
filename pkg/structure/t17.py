"""
The 17-element transversal set of λ(C5) and its multiplication table.

Every element of λ(C5) is uniquely ℒ+b with ℒ in the set and b in C5, so
this table recovers the whole of λ(C5).
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Tuple

from lambdaop import T17_NAMES, translate_label

from .analysis import idempotents
from .errors import NameResolutionFailure
from .orbits import orbit_projection, translation_orbits

if TYPE_CHECKING:
    from lambdaop import LambdaSemigroup

# Columns shown separately; the six elements aΘ, aΓ share the last column.
DISPLAYED_COLUMNS = ("Λ₄", "Λ", "Δ", "Λ₃", "-Λ₃", "2Λ", "2Δ", "2Λ₃", "-2Λ₃")
THETA_GAMMA = ("Θ", "2Θ", "Γ", "-Γ", "2Γ", "-2Γ")

# row -> (product with Λ, Δ, Λ₃, -Λ₃;  product with 2Λ, 2Δ, 2Λ₃, -2Λ₃)
_BLOCKS: Dict[str, Tuple[str, str]] = {
    "Λ₄": ("Λ", "2Λ"),
    "Λ": ("Λ", "𝒵"),
    "Δ": ("Λ", "2Θ"),
    "Λ₃": ("Λ", "2Θ+2"),
    "-Λ₃": ("Λ", "2Θ-2"),
    "2Λ": ("𝒵", "2Λ"),
    "2Δ": ("Θ", "2Λ"),
    "2Λ₃": ("Θ-1", "2Λ"),
    "-2Λ₃": ("Θ+1", "2Λ"),
    "Θ": ("Θ", "𝒵"),
    "2Θ": ("𝒵", "2Θ"),
    "Γ": ("Θ+1", "2Θ+2"),
    "-Γ": ("Θ-1", "2Θ-2"),
    "2Γ": ("Θ-1", "2Θ+2"),
    "-2Γ": ("Θ+1", "2Θ-2"),
}


def expected_entries() -> Dict[Tuple[str, str], str]:
    """Known products row∗column for the displayed rows, by name."""
    entries = {}
    for row, (first, second) in _BLOCKS.items():
        entries[(row, "Λ₄")] = row
        for column in DISPLAYED_COLUMNS[1:5]:
            entries[(row, column)] = first
        for column in DISPLAYED_COLUMNS[5:]:
            entries[(row, column)] = second
        for column in THETA_GAMMA:
            entries[(row, column)] = "𝒵"
    return entries


@dataclass(frozen=True)
class T17Table:
    names: Tuple[str, ...]
    indices: Tuple[int, ...]
    products: Tuple[Tuple[int, ...], ...]
    entries: Tuple[Tuple[str, ...], ...]
    squares: Dict[str, str]
    mismatches: Tuple[Tuple[str, str, str, str], ...]

    @property
    def matches(self) -> bool:
        return not self.mismatches

    def entry(self, row: str, column: str) -> str:
        return self.entries[self.names.index(row)][self.names.index(column)]


def resolve(L: "LambdaSemigroup", names=T17_NAMES) -> List[int]:
    missing = [name for name in names if name not in L.named]
    if missing:
        raise NameResolutionFailure(f"{L.name} has no elements called {', '.join(missing)}")
    return [L.named[name] for name in names]


def render(L: "LambdaSemigroup", x: int, names=T17_NAMES) -> str:
    """Write x as name+b for a named orbit representative."""
    for name in names:
        rep = L.named[name]
        for b in range(L.home.size):
            if L.translate(rep, b) == x:
                return name if b == 0 else translate_label(L.home, name, b)
    raise NameResolutionFailure(f"{L.label(x)} is not a translate of a named element")


def build_T17(L: "LambdaSemigroup") -> T17Table:
    """
    Products of the 17 named orbit representatives of λ(C5), rendered as name+b.

    Args:
        L: λ(C5) with its named elements resolved

    Returns:
        The table, the squares landing on idempotents, and every disagreement
        with the known products
    """
    indices = resolve(L)
    if len(translation_orbits(L)) != len(indices):
        raise NameResolutionFailure(f"{L.name} does not have {len(indices)} translation orbits")
    projection = orbit_projection(L)
    if sorted(projection[i] for i in indices) != list(range(len(indices))):
        raise NameResolutionFailure("Named representatives do not meet every orbit once")

    products = tuple(tuple(L.mul(i, j) for j in indices) for i in indices)
    entries = [[render(L, x) for x in row] for row in products]

    idempotent = set(idempotents(L.semigroup))
    squares = {name: L.label(L.mul(i, i)) for name, i in zip(T17_NAMES, indices) if L.mul(i, i) in idempotent}

    mismatches = []
    for (row, column), wanted in expected_entries().items():
        got = entries[T17_NAMES.index(row)][T17_NAMES.index(column)]
        if got != wanted:
            mismatches.append((row, column, wanted, got))
    return T17Table(
        names=T17_NAMES,
        indices=tuple(indices),
        products=products,
        entries=tuple(tuple(row) for row in entries),
        squares=squares,
        mismatches=tuple(mismatches),
    )
