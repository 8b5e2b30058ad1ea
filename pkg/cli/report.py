from pathlib import Path
from typing import List, Optional

from groups import automorphisms
from lambdaop import LambdaSemigroup
from morphisms import AutGroup, automorphisms_seeded, restriction_epimorphism
from structure import (
    T17Table,
    idempotent_poset,
    idempotents,
    maximal_ideal,
    orbit_representatives,
    translation_orbits,
    zero_element,
)

from .schema import (
    AutExport,
    ElementExport,
    GroupExport,
    LambdaExport,
    LambdaReport,
    OrbitExport,
    StructureExport,
)
from .utils import write_csv, write_json


def _labels(L: LambdaSemigroup, indices) -> List[str]:
    return [L.label(i) for i in sorted(indices)]


def aut_summary(L: LambdaSemigroup, aut: Optional[AutGroup] = None) -> AutExport:
    aut = aut or automorphisms_seeded(L)
    group_auts = AutGroup(tuple(f.images for f in automorphisms(L.home)), L.home.name)
    restriction = restriction_epimorphism(aut, L)
    return AutExport(
        group_order=group_auts.order,
        group_name=group_auts.identified_name,
        lambda_order=aut.order,
        lambda_name=aut.identified_name,
        kernel_size=restriction.kernel_size,
        lifted_normal=restriction.lifted_normal,
    )


def lambda_report(L: LambdaSemigroup, with_aut: bool = True, t17: Optional[T17Table] = None) -> LambdaReport:
    """Everything the `lambda` command exports about λ(G), tables excluded."""
    g, s = L.home, L.semigroup
    zero = zero_element(s)
    ideal = maximal_ideal(s)
    poset = idempotent_poset(s)
    elements = [
        ElementExport(
            index=i,
            label=L.label(i),
            minimal_sets=[e.family.ground.format_mask(mask) for mask in e.family.minimal_sets],
        )
        for i, e in enumerate(L.elements)
    ]
    orbits = [
        OrbitExport(representative=L.label(rep), members=_labels(L, orbit))
        for rep, orbit in zip(orbit_representatives(L), translation_orbits(L))
    ]
    return LambdaReport(
        group=GroupExport(
            name=g.name,
            order=g.size,
            labels=[g.label(x) for x in range(g.size)],
            table=[list(row) for row in g.table],
        ),
        lambda_=LambdaExport(size=L.size, elements=elements),
        structure=StructureExport(
            idempotents=_labels(L, idempotents(s)),
            zero=None if zero is None else L.label(zero),
            poset_edges=[[L.label(e), L.label(f)] for e, f in poset.hasse_edges()],
            maximal_ideal=None if ideal is None else _labels(L, ideal),
            orbits=orbits,
        ),
        aut=aut_summary(L) if with_aut else None,
        t17=None if t17 is None else {row: dict(zip(t17.names, entries)) for row, entries in zip(t17.names, t17.entries)},
    )


def export_lambda(L: LambdaSemigroup, out: Path, with_aut: bool = True, t17: Optional[T17Table] = None) -> List[Path]:
    """Write report.json, table.csv, table_indices.csv and, given a T17 table, t17.csv."""
    labels = [L.label(i) for i in range(L.size)]
    written = [out / "table.csv", out / "table_indices.csv", out / "report.json"]
    write_csv(written[0], [""] + labels, ([labels[i]] + [labels[x] for x in row] for i, row in enumerate(L.table)))
    write_csv(written[1], None, L.table)
    write_json(written[2], lambda_report(L, with_aut, t17))
    if t17 is not None:
        written.append(out / "t17.csv")
        write_csv(written[-1], [""] + list(t17.names), ([row] + list(entries) for row, entries in zip(t17.names, t17.entries)))
    return written
