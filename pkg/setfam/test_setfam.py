import pytest
from hypothesis import given, strategies as st

from setfam import (
    EmptyBaseSet,
    Family,
    GroundSet,
    GroundSetError,
    MaskOutOfRange,
    MaxLinkedFamily,
    NotMaximalLinked,
    NotUpwardClosed,
    is_linked,
    is_maximal_linked,
    minimal_sets,
    mirror_bits,
    principal,
    up_closure,
)
from setfam.family import _extension_test, _self_dual_test


@pytest.fixture
def ground3():
    return GroundSet(3)


@pytest.fixture
def triangle(ground3):
    # {0,1}, {0,2}, {1,2}
    return up_closure([0b011, 0b101, 0b110], ground3)


def members(family):
    return set(family)


def test_up_closure_of_pairs_is_majority(triangle):
    assert members(triangle) == {0b011, 0b101, 0b110, 0b111}


def test_up_closure_of_singleton_is_principal(ground3):
    family = up_closure([0b001], ground3)
    assert members(family) == {0b001, 0b011, 0b101, 0b111}
    assert family.bits == principal(ground3, 0).bits


def test_up_closure_of_two_disjoint_pairs():
    family = up_closure([0b0011, 0b1100], GroundSet(4))
    expected = {mask for mask in range(16) if mask & 0b0011 == 0b0011 or mask & 0b1100 == 0b1100}
    assert members(family) == expected
    assert len(family) == 7


def test_up_closure_rejects_bad_generators(ground3):
    with pytest.raises(EmptyBaseSet):
        up_closure([0], ground3)
    with pytest.raises(MaskOutOfRange):
        up_closure([8], ground3)


def test_family_never_holds_the_empty_set(ground3):
    with pytest.raises(EmptyBaseSet):
        Family(ground3, 0b1)


def test_is_linked(triangle):
    assert is_linked(triangle)
    assert not is_linked(up_closure([0b01, 0b10], GroundSet(2)))
    assert not is_linked(up_closure([0b0011, 0b1100], GroundSet(4)))


def test_is_maximal_linked(ground3, triangle):
    assert is_maximal_linked(triangle)
    assert is_maximal_linked(principal(ground3, 0))
    assert not is_maximal_linked(up_closure([0b011], ground3))


def test_minimal_sets(ground3, triangle):
    assert minimal_sets(triangle) == [0b011, 0b101, 0b110]
    assert minimal_sets(principal(ground3, 0)) == [0b001]
    ground5 = GroundSet(5)
    zero = Family(ground5, sum(1 << mask for mask in range(32) if bin(mask).count("1") >= 3))
    assert minimal_sets(zero) == sorted(mask for mask in range(32) if bin(mask).count("1") == 3)


def test_minimal_sets_requires_upfamily(ground3):
    with pytest.raises(NotUpwardClosed):
        minimal_sets(Family(ground3, 1 << 0b001))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_characterizations_agree_on_every_linked_upfamily(n):
    ground = GroundSet(n)
    checked = 0
    for bits in range(0, 1 << (1 << n), 2):
        family = Family(ground, bits)
        if not family.is_upward_closed() or not is_linked(family):
            continue
        assert _self_dual_test(family) == _extension_test(family)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("n", range(1, 8))
def test_principal_families_are_maximal_linked(n):
    ground = GroundSet(n)
    for x in range(n):
        family = principal(ground, x)
        assert is_maximal_linked(family)
        assert family.minimal_sets == (1 << x,)
        # self-duality: exactly one of A and its complement
        assert family.bits ^ mirror_bits(family.bits, n) == (1 << (1 << n)) - 1


def test_max_linked_family_validation(ground3, triangle):
    assert MaxLinkedFamily.from_family(triangle).minimal_sets == (0b011, 0b101, 0b110)
    with pytest.raises(NotMaximalLinked):
        MaxLinkedFamily.from_generators([0b011], ground3)


def test_ground_set_validation():
    with pytest.raises(GroundSetError):
        GroundSet(0)
    with pytest.raises(GroundSetError):
        GroundSet(13)
    with pytest.raises(GroundSetError):
        GroundSet(2, ("a", "a"))
    ground = GroundSet(3, ("1", "z", "-z"))
    assert ground.parse_mask("{z,-z}") == 0b110
    assert ground.format_mask(0b011) == "{1,z}"
    assert GroundSet(5).parse_mask("024") == 0b10101
    assert GroundSet(5).format_mask(0b10101) == "024"


def test_labelled_ground_set_reads_labels_only():
    ground = GroundSet(3, ("1", "z", "-z"))
    assert ground.index_of("1") == 0
    assert ground.parse_mask("{1,z}") == 0b011
    with pytest.raises(MaskOutOfRange):
        ground.parse_mask("01")
    with pytest.raises(MaskOutOfRange):
        ground.index_of("2")
    assert GroundSet(3).parse_mask("01") == 0b011
    assert GroundSet(3).index_of("1") == 1


def test_format_mask_is_uniform_over_the_ground_set():
    ground = GroundSet(3, ("1", "z", "-z"))
    assert ground.format_mask(0b011) == "{1,z}"
    assert ground.format_mask(0b110) == "{z,-z}"
    assert ground.format_mask(0b001) == "{1}"
    assert GroundSet(3, ("a", "b", "c")).format_mask(0b011) == "ab"


def test_describe_uses_generators(triangle):
    assert triangle.describe() == "⟨01, 02, 12⟩"


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=8))
))
def test_up_closure_round_trips_through_minimal_sets(case):
    n, base = case
    ground = GroundSet(n)
    family = up_closure(base, ground)
    again = up_closure(minimal_sets(family), ground)
    assert again == family
    assert up_closure(list(family), ground) == family
