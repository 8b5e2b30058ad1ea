"""
Automorphisms of λ(G) for |G| = 4 through the holomorph, and the
restriction of Aut(λ(G)) to the principal copy of G.
"""

from dataclasses import dataclass
from typing import List, Tuple

from groups import FiniteGroup, GroupMap, automorphisms, holomorph
from lambdaop import LambdaSemigroup

from .errors import NotAnAutomorphism
from .search import AutGroup, Permutation, compose, is_isomorphism, lifted_automorphisms


def holomorph_automorphism(a: int, f: GroupMap, L: LambdaSemigroup) -> Permutation:
    """
    ψ_{a,f}: x -> f(x), x□ -> f(x)□, x△ -> f(x)·a△.

    Raises:
        NotAnAutomorphism: ψ_{a,f} is not an automorphism of L
    """
    g = L.home
    if f.source is not g or f.target is not g:
        raise NotAnAutomorphism(f"{f} is not a self-map of {g.name}")
    try:
        triangle, square = L.named["△"], L.named["□"]
    except KeyError as e:
        raise NotAnAutomorphism(f"{L.name} has no elements named △ and □") from e
    images: List[int] = [-1] * L.size
    for x in range(g.size):
        fx = f(x)
        images[L.principal_index[x]] = L.principal_index[fx]
        images[L.translate(square, x)] = L.translate(square, fx)
        images[L.translate(triangle, x)] = L.translate(triangle, g.mul(fx, a))
    if -1 in images or not is_isomorphism(L.semigroup, L.semigroup, images):
        raise NotAnAutomorphism(f"ψ_({g.label(a)}, {f.images}) is not an automorphism of {L.name}")
    return tuple(images)


@dataclass(frozen=True)
class HolomorphRepresentation:
    hol: FiniteGroup
    permutations: Tuple[Permutation, ...]
    injective: bool
    homomorphism: bool
    onto: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.injective and self.homomorphism and self.onto


def holomorph_representation(L: LambdaSemigroup, aut: AutGroup) -> HolomorphRepresentation:
    """(a, f) -> ψ_{a,f} on Hol(G), indexed as in `groups.holomorph`."""
    g = L.home
    auts = automorphisms(g)
    hol = holomorph(g)
    permutations = tuple(holomorph_automorphism(a, f, L) for a in range(g.size) for f in auts)
    homomorphism = all(
        permutations[hol.mul(i, j)] == compose(permutations[i], permutations[j])
        for i in range(hol.m)
        for j in range(hol.m)
    )
    return HolomorphRepresentation(
        hol=hol,
        permutations=permutations,
        injective=len(set(permutations)) == hol.m,
        homomorphism=homomorphism,
        onto=set(permutations) == set(aut.carrier),
    )


@dataclass(frozen=True)
class RestrictionReport:
    images: Tuple[int, ...]
    homomorphism: bool
    surjective: bool
    kernel_size: int
    lifted_normal: bool


def restriction_epimorphism(aut: AutGroup, L: LambdaSemigroup) -> RestrictionReport:
    """
    ψ -> ψ restricted to the principal elements, as a map Aut(λ(G)) -> Aut(G).

    Also reports whether the lifted copy {λφ} is normal in Aut(λ(G)).
    """
    g = L.home
    group_auts = automorphisms(g)
    position = {f.images: k for k, f in enumerate(group_auts)}
    where = {p: x for x, p in enumerate(L.principal_index)}
    images = []
    for psi in aut.carrier:
        restricted = tuple(where.get(psi[p], -1) for p in L.principal_index)
        if restricted not in position:
            raise NotAnAutomorphism(f"An automorphism of {L.name} does not restrict to Aut({g.name})")
        images.append(position[restricted])

    def compose_in_aut_g(i: int, j: int) -> int:
        return position[group_auts[i].compose(group_auts[j]).images]

    homomorphism = all(
        images[aut.table[i][j]] == compose_in_aut_g(images[i], images[j])
        for i in range(aut.order)
        for j in range(aut.order)
    )
    identity_index = position[tuple(range(g.size))]
    lifted = {aut.index_of(p) for p in lifted_automorphisms(L)}
    inverse = [row.index(0) for row in aut.table]
    lifted_normal = all(aut.table[aut.table[k][h]][inverse[k]] in lifted for k in range(aut.order) for h in lifted)
    return RestrictionReport(
        images=tuple(images),
        homomorphism=homomorphism,
        surjective=set(images) == set(range(len(group_auts))),
        kernel_size=images.count(identity_index),
        lifted_normal=lifted_normal,
    )
