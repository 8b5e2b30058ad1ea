import random

import pytest
from hypothesis import given, strategies as st

from groups import OrderTooLarge, make_cyclic
from lambdaenum import LAMBDA_NUMBERS
from lambdaop import (
    GroundMismatch,
    NotAUnit,
    affine_image,
    build_lambda,
    LambdaElement,
    labelled_group,
    lambda_map,
    product,
    product_oracle,
)
from setfam import is_maximal_linked


def test_sizes(lambda_c1, lambda_c2, lambda_c3, lambda_c4, lambda_klein, lambda_c5):
    assert [L.size for L in (lambda_c1, lambda_c2, lambda_c3, lambda_c4, lambda_c5)] == [
        LAMBDA_NUMBERS[n] for n in range(1, 6)
    ]
    assert lambda_klein.size == 12


def test_elements_are_sorted_and_maximal(lambda_c4):
    bits = [e.bits for e in lambda_c4.elements]
    assert bits == sorted(bits)
    assert all(is_maximal_linked(e.family) for e in lambda_c4.elements)


def test_triangle_is_the_zero_of_c3(lambda_c3):
    zero = lambda_c3.named["△"]
    for i in range(lambda_c3.size):
        assert lambda_c3.mul(zero, i) == zero
        assert lambda_c3.mul(i, zero) == zero


def test_named_elements_ignore_group_labels(lambda_c3, lambda_c4, lambda_klein):
    triangle = lambda_c3.elements[lambda_c3.named["△"]]
    assert triangle.family.minimal_sets == (0b011, 0b101, 0b110)
    assert lambda_c3.named["△"] not in lambda_c3.principal_index

    named = lambda_c4.named
    assert named["△"] != named["□"]
    assert lambda_c4.elements[named["△"]].family.minimal_sets == (0b0011, 0b1001, 0b1010)
    assert lambda_c4.elements[named["□"]].family.minimal_sets == (0b0011, 0b0101, 0b1001, 0b1110)
    assert len(set(lambda_klein.named.values()) | set(lambda_klein.principal_index)) == 6


def test_c4_named_products(lambda_c4):
    tri, square = lambda_c4.named["△"], lambda_c4.named["□"]
    assert lambda_c4.mul(tri, tri) == square
    assert lambda_c4.mul(square, square) == square
    assert lambda_c4.mul(tri, square) == tri
    assert lambda_c4.mul(square, tri) == tri


def test_c5_delta_times_two_lambda(lambda_c5):
    assert lambda_c5.mul(lambda_c5.named["Δ"], lambda_c5.named["2Λ"]) == lambda_c5.named["2Θ"]


@pytest.mark.parametrize("fixture", ["lambda_c3", "lambda_c4", "lambda_klein", "lambda_c5"])
def test_principal_embedding_is_a_homomorphism(fixture, request):
    L = request.getfixturevalue(fixture)
    g = L.home
    assert len(set(L.principal_index)) == g.size
    for x in range(g.size):
        for y in range(g.size):
            assert L.mul(L.principal_index[x], L.principal_index[y]) == L.principal_index[g.mul(x, y)]
    unit = L.principal_index[g.identity]
    for i in range(L.size):
        assert L.mul(unit, i) == i == L.mul(i, unit)


@pytest.mark.parametrize("fixture", ["lambda_c4", "lambda_klein", "lambda_c5"])
def test_principal_elements_are_central(fixture, request):
    L = request.getfixturevalue(fixture)
    for p in L.principal_index:
        for i in range(L.size):
            assert L.mul(p, i) == L.mul(i, p)


@pytest.mark.parametrize("fixture", ["lambda_c2", "lambda_c3", "lambda_c4", "lambda_klein"])
def test_table_matches_oracle(fixture, request):
    L = request.getfixturevalue(fixture)
    for i, a in enumerate(L.elements):
        for j, b in enumerate(L.elements):
            expected = L.elements[L.mul(i, j)]
            assert product(a, b) == expected
            assert product_oracle(a, b) == expected


@given(st.integers(0, 80), st.integers(0, 80))
def test_c5_table_matches_oracle_on_sampled_pairs(lambda_c5, i, j):
    a, b = lambda_c5.elements[i], lambda_c5.elements[j]
    assert product_oracle(a, b) == lambda_c5.elements[lambda_c5.mul(i, j)]


def test_c5_translation_equivariance(lambda_c5):
    L = lambda_c5
    for a in range(5):
        for b in range(5):
            for i in range(L.size):
                for j in range(0, L.size, 7):
                    left = L.mul(L.translate(i, a), L.translate(j, b))
                    assert left == L.translate(L.translate(L.mul(i, j), a), b)


def test_c5_sampled_associativity(lambda_c5):
    rng = random.Random(5)
    for _ in range(2000):
        x, y, z = (rng.randrange(81) for _ in range(3))
        assert lambda_c5.mul(lambda_c5.mul(x, y), z) == lambda_c5.mul(x, lambda_c5.mul(y, z))


def test_lambda_map_identity_and_negation(lambda_c5):
    L = lambda_c5
    negate = [(-x) % 5 for x in range(5)]
    for i, e in enumerate(L.elements):
        assert lambda_map(list(range(5)), e.family) == e.family
    for name in ["Λ", "Θ", "𝒵"]:
        family = L.elements[L.named[name]].family
        assert lambda_map(negate, family) == family


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_scaling_fixes_lambda4(lambda_c5, a):
    lam4 = lambda_c5.elements[lambda_c5.named["Λ₄"]]
    assert affine_image(a, 0, lam4) == lam4


def test_affine_names(lambda_c5):
    L = lambda_c5
    delta = L.elements[L.named["Δ"]]
    assert affine_image(1, 0, delta) == delta
    doubled = affine_image(2, 0, delta)
    assert doubled != delta
    assert L.index_of(doubled) == L.named["2Δ"]
    assert affine_image(2, 0, L.elements[L.named["Λ"]]) == L.elements[L.named["2Λ"]]
    assert L.affine(3, 0, L.named["Λ₃"]) == L.named["-2Λ₃"]


def test_zero_of_c5_has_a_single_translate(lambda_c5):
    zero = lambda_c5.named["𝒵"]
    assert {lambda_c5.translate(zero, b) for b in range(5)} == {zero}


def test_affine_image_rejects_non_units(lambda_c5):
    with pytest.raises(NotAUnit):
        affine_image(5, 0, lambda_c5.elements[0])
    with pytest.raises(NotAUnit):
        affine_image(2, 1, build_lambda(make_cyclic(4)).elements[0])


def test_lambda_map_is_functorial(lambda_c4):
    rng = random.Random(4)
    for _ in range(20):
        f = [rng.randrange(4) for _ in range(4)]
        g = [rng.randrange(4) for _ in range(4)]
        f_after_g = [f[y] for y in g]
        for e in lambda_c4.elements:
            assert lambda_map(f_after_g, e.family) == lambda_map(f, lambda_map(g, e.family))


def test_labels(lambda_c4, lambda_c5):
    assert len(set(lambda_c4.labels)) == lambda_c4.size
    assert lambda_c4.index_of("i") == lambda_c4.principal_index[1]
    assert lambda_c4.index_of("i△") == lambda_c4.translate(lambda_c4.named["△"], 1)
    assert lambda_c4.index_of("-△") == lambda_c4.translate(lambda_c4.named["△"], 2)
    assert lambda_c5.label(lambda_c5.principal_index[0]) == "𝒰"
    assert lambda_c5.index_of("Θ+1") == lambda_c5.translate(lambda_c5.named["Θ"], 1)
    assert lambda_c5.index_of("2Θ-2") == lambda_c5.translate(lambda_c5.named["2Θ"], 3)
    assert len(set(lambda_c5.labels)) == lambda_c5.size


def test_mixed_homes_are_rejected(lambda_c4, lambda_klein):
    with pytest.raises(GroundMismatch):
        product(lambda_c4.elements[0], lambda_klein.elements[0])
    with pytest.raises(GroundMismatch):
        LambdaElement(lambda_c4.elements[0].family, labelled_group("C3"))


def test_build_is_bounded():
    with pytest.raises(OrderTooLarge):
        build_lambda(make_cyclic(6))
