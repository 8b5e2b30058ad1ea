import pytest

from groups import make_cyclic
from structure import (
    NotASemilattice,
    NotAssociative,
    SearchTooLarge,
    SemigroupTable,
    adjoin_zero,
    build_T17,
    find_transversal_semigroups,
    idempotent_poset,
    idempotent_roots,
    idempotents,
    is_associative,
    is_ideal,
    maximal_ideal,
    orbit_projection,
    orbit_semigroup,
    principal_ideal,
    root_semigroup,
    sqrt_set,
    translation_orbits,
    verify_transversal,
    zero_element,
)


def names(L, indices):
    return {L.label(i) for i in indices}


def test_idempotents(lambda_c4, lambda_c5):
    assert names(lambda_c5, idempotents(lambda_c5.semigroup)) == {"𝒰", "𝒵", "Λ₄", "Λ", "2Λ"}
    assert names(lambda_c4, idempotents(lambda_c4.semigroup)) == {"1", "□"}
    group = SemigroupTable(make_cyclic(5).table)
    assert idempotents(group) == [0]


def test_zero_element(lambda_c3, lambda_c4, lambda_c5):
    assert zero_element(lambda_c3.semigroup) == lambda_c3.named["△"]
    assert zero_element(lambda_c5.semigroup) == lambda_c5.named["𝒵"]
    assert zero_element(lambda_c4.semigroup) is None


def test_c5_semilattice_order(lambda_c5):
    L = lambda_c5
    poset = idempotent_poset(L.semigroup)
    n = L.named
    edges = {(L.label(e), L.label(f)) for e, f in poset.hasse_edges()}
    assert edges == {("𝒵", "Λ"), ("𝒵", "2Λ"), ("Λ", "Λ₄"), ("2Λ", "Λ₄"), ("Λ₄", "𝒰")}
    assert not poset.leq(n["Λ"], n["2Λ"]) and not poset.leq(n["2Λ"], n["Λ"])
    assert poset.minimum() == n["𝒵"]
    assert poset.maximum() == n["𝒰"]


def test_c4_semilattice_order(lambda_c4):
    poset = idempotent_poset(lambda_c4.semigroup)
    square, unit = lambda_c4.named["□"], lambda_c4.principal_index[0]
    assert poset.hasse_edges() == [(square, unit)]


def test_one_point_poset():
    poset = idempotent_poset(SemigroupTable(((0,),)))
    assert poset.elements == (0,)
    assert poset.hasse_edges() == []


def test_non_commuting_idempotents():
    # left-zero band: x∗y = x
    with pytest.raises(NotASemilattice):
        idempotent_poset(SemigroupTable(((0, 0), (1, 1))))


@pytest.mark.parametrize("fixture", ["lambda_c1", "lambda_c2", "lambda_c3", "lambda_c4", "lambda_klein", "lambda_c5"])
def test_maximal_ideal_is_complement_of_group(fixture, request):
    L = request.getfixturevalue(fixture)
    rest = set(range(L.size)) - set(L.principal_index)
    ideal = maximal_ideal(L.semigroup)
    if rest:
        assert ideal == rest
        assert is_ideal(L.semigroup, ideal)
    else:
        assert ideal is None


def test_maximal_ideal_sizes(lambda_c4, lambda_c5):
    assert len(maximal_ideal(lambda_c4.semigroup)) == 8
    assert len(maximal_ideal(lambda_c5.semigroup)) == 76
    assert maximal_ideal(SemigroupTable(make_cyclic(4).table)) is None


def test_principal_ideal_of_zero(lambda_c5):
    zero = lambda_c5.named["𝒵"]
    assert principal_ideal(lambda_c5.semigroup, zero) == {zero}
    with pytest.raises(ValueError):
        is_ideal(lambda_c5.semigroup, [])


def test_translation_orbits(lambda_c1, lambda_c4, lambda_c5):
    orbits = translation_orbits(lambda_c5)
    assert len(orbits) == 17
    assert sorted(len(orbit) for orbit in orbits) == [1] + [5] * 16
    assert (lambda_c5.named["𝒵"],) in orbits
    assert sorted(len(orbit) for orbit in translation_orbits(lambda_c4)) == [4, 4, 4]
    assert translation_orbits(lambda_c1) == [(0,)]


def test_orbit_semigroup(lambda_c1, lambda_c4, lambda_c5):
    assert orbit_semigroup(lambda_c5).size == 17
    quotient = orbit_semigroup(lambda_c4)
    assert quotient.size == 3
    assert set(quotient.labels) == {"[1]", "[△]", "[□]"}
    assert orbit_semigroup(lambda_c1).size == 1


def test_orbit_projection_is_a_homomorphism(lambda_c5):
    quotient = orbit_semigroup(lambda_c5)
    projection = orbit_projection(lambda_c5)
    for x in range(81):
        for y in range(81):
            assert projection[lambda_c5.mul(x, y)] == quotient.mul(projection[x], projection[y])


def test_transversals(lambda_c4, lambda_klein):
    c4 = lambda_c4
    assert verify_transversal(c4, [c4.principal_index[0], c4.named["△"], c4.named["□"]])
    assert not verify_transversal(c4, [c4.principal_index[0], c4.named["△"], c4.index_of("i□")])
    k = lambda_klein
    assert verify_transversal(k, [k.principal_index[0], k.named["△"], k.named["□"]])
    found = find_transversal_semigroups(c4)
    assert tuple(sorted([c4.principal_index[0], c4.named["△"], c4.named["□"]])) in found


def test_transversal_search_is_bounded(lambda_c5):
    with pytest.raises(SearchTooLarge):
        find_transversal_semigroups(lambda_c5)


def test_square_roots(lambda_c5):
    L = lambda_c5
    s = L.semigroup
    n = L.named
    roots_of_zero = sqrt_set(s, [n["𝒵"]]) - {n["𝒵"]}
    expected = {L.translate(n[name], b) for name in ["Θ", "2Θ", "Γ", "2Γ", "-Γ", "-2Γ"] for b in range(5)}
    assert roots_of_zero == expected
    assert len(roots_of_zero) == 30
    assert len(sqrt_set(s, [n["𝒵"]])) == 31
    assert sqrt_set(s, [n["Λ"]]) - {n["Λ"]} == {n["Δ"], n["Λ₃"], n["-Λ₃"]}
    assert sqrt_set(s, [n["2Λ"]]) - {n["2Λ"]} == {n["2Δ"], n["2Λ₃"], n["-2Λ₃"]}


def test_roots_of_idempotents(lambda_c5):
    L = lambda_c5
    s = L.semigroup
    roots = sqrt_set(s, idempotents(s))
    t17 = set(build_T17(L).indices)
    zero = L.named["𝒵"]
    roots_of_zero = sqrt_set(s, [zero]) - {zero}
    assert len(roots_of_zero) == 30
    assert roots == t17 | roots_of_zero
    assert roots == idempotent_roots(s)
    projection = orbit_projection(L)
    outside = roots - roots_of_zero
    assert len({projection[x] for x in outside}) == len(outside)


def test_roots_of_identity_in_a_group():
    assert sqrt_set(SemigroupTable(make_cyclic(4).table), [0]) == {0, 2}


def test_characterising_sets(lambda_c5):
    L = lambda_c5
    n = L.named
    found = {x for x in range(L.size) if L.mul(x, x) == n["Λ"] and L.mul(x, n["Λ"]) == n["Λ"] and L.mul(x, n["2Λ"]) == n["2Θ"]}
    assert found == {n["Δ"]}
    theta1, two_theta2 = L.index_of("Θ+1"), L.index_of("2Θ+2")
    found = {x for x in range(L.size) if L.mul(x, x) == n["𝒵"] and L.mul(x, n["Λ"]) == theta1 and L.mul(x, n["2Λ"]) == two_theta2}
    assert found == {n["Γ"]}


def test_cubes(lambda_c5):
    L = lambda_c5
    for name in ["Δ", "Λ₃"]:
        x = L.named[name]
        assert L.mul(x, x) == L.named["Λ"]
        assert L.mul(L.mul(x, x), x) == L.named["Λ"]


def test_t17_table(lambda_c5):
    table = build_T17(lambda_c5)
    assert table.matches, table.mismatches
    assert table.entry("Δ", "Λ₄") == "Δ"
    assert table.entry("Γ", "Λ") == "Θ+1"
    assert table.entry("-2Γ", "2Λ₃") == "2Θ-2"
    for column in ["Θ", "2Θ", "Γ", "-Γ", "2Γ", "-2Γ"]:
        assert table.entry("Θ", column) == "𝒵"
    assert table.squares["Δ"] == "Λ"
    assert table.squares["-2Λ₃"] == "2Λ"
    assert table.squares["Γ"] == "𝒵"
    assert table.squares["Λ₄"] == "Λ₄"


def test_root_semigroup_and_zero():
    r4 = root_semigroup(4)
    assert r4.size == 4
    assert zero_element(r4) == 3
    assert r4.labels[-1] == "0"
    s = adjoin_zero(make_cyclic(2))
    assert s.size == 3 and zero_element(s) == 2


def test_associativity_checks():
    with pytest.raises(NotAssociative):
        SemigroupTable(((1, 0), (0, 0)))
    left_zero = SemigroupTable(tuple(tuple(x for _ in range(120)) for x in range(120)))
    assert is_associative(left_zero.array)
