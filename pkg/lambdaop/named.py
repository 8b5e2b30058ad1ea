"""
Customary names of small superextension elements.

Generator lists are written in element indices: cyclic groups as residues,
C2xC2 with (a, b) at index 2a + b. Multiplicative labels are attached by
`labelled_group`.
"""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

from groups import FiniteGroup, direct_product, make_cyclic

from .element import Home

GROUP_LABELS: Dict[str, Tuple[str, ...]] = {
    "C3": ("1", "z", "-z"),
    "C4": ("1", "i", "-1", "-i"),
    "C2xC2": ("(1,1)", "(1,-1)", "(-1,1)", "(-1,-1)"),
}

GENERATORS: Dict[str, Dict[str, List[str]]] = {
    "C3": {
        "△": ["01", "02", "12"],
    },
    "C4": {
        "△": ["01", "03", "13"],
        "□": ["01", "03", "02", "123"],
    },
    "C2xC2": {
        "△": ["01", "02", "12"],
        "□": ["01", "02", "03", "123"],
    },
    "C5": {
        "𝒰": ["0"],
        "𝒵": ["".join(map(str, triple)) for triple in combinations(range(5), 3)],
        "Λ₄": ["01", "02", "03", "04", "1234"],
        "Λ": ["02", "03", "123", "014", "234"],
        "Δ": ["02", "03", "23"],
        "Λ₃": ["02", "03", "04", "234"],
        "2Λ": ["04", "01", "124", "023", "143"],
        "Θ": ["14", "012", "013", "123", "024", "034", "234"],
        "Γ": ["02", "04", "013", "124", "234"],
    },
}

# name -> (multiplier, source name) under x -> a·x
SCALED: Dict[str, Dict[str, Tuple[int, str]]] = {
    "C5": {
        "-Λ₃": (4, "Λ₃"),
        "2Δ": (2, "Δ"),
        "2Λ₃": (2, "Λ₃"),
        "-2Λ₃": (3, "Λ₃"),
        "2Θ": (2, "Θ"),
        "-Γ": (4, "Γ"),
        "2Γ": (2, "Γ"),
        "-2Γ": (3, "Γ"),
    },
}

# Orbit representatives of the translation action on λ(C5), in table order.
T17_NAMES = (
    "𝒰", "𝒵", "Λ₄", "Λ", "Δ", "Λ₃", "-Λ₃", "2Λ", "2Δ", "2Λ₃", "-2Λ₃",
    "Θ", "2Θ", "Γ", "-Γ", "2Γ", "-2Γ",
)


def labelled_group(name: str) -> FiniteGroup:
    """C1..C5 or C2xC2 carrying its customary element labels."""
    if name == "C2xC2":
        group = direct_product(make_cyclic(2), make_cyclic(2))
    elif name.startswith("C") and name[1:].isdigit():
        group = make_cyclic(int(name[1:]))
    else:
        raise KeyError(f"No customary labelling for {name}")
    labels = GROUP_LABELS.get(name)
    return group.with_labels(labels) if labels else group


def notation_key(home: Home) -> Optional[str]:
    """Key into GENERATORS when `home` is one of the named groups."""
    if home.name in GENERATORS and isinstance(home, FiniteGroup):
        reference = direct_product(make_cyclic(2), make_cyclic(2)) if home.name == "C2xC2" else make_cyclic(home.size)
        if home.table == reference.table:
            return home.name
    return None


def translate_label(home: Home, name: str, b: int) -> str:
    """Name of the translate by group element b of the element called `name`."""
    labels = getattr(home, "labels", None)
    if labels is None:
        n = home.size
        return f"{name}+{b}" if b <= n // 2 else f"{name}-{n - b}"
    prefix = labels[b]
    if prefix == "-1":
        prefix = "-"
    return f"{prefix}{name}"
