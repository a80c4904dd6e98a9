import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ramsey_rings.configs import IndexSet, Sequence
from ramsey_rings.errors import ParseError, SearchExhausted
from ramsey_rings.gaussian import GaussianInt
from ramsey_rings.large_sets import (
    Complement,
    Dilate,
    Everything,
    Ideal,
    Intersection,
    LeftPreimage,
    Nothing,
    Residue,
    RightPreimage,
    Translate,
    Union,
    box,
    dilate,
    find_j_witness,
    left_preimage,
    member,
    membership_equal,
    parse_description,
    right_preimage,
    translate,
)
from ramsey_rings.quaternion import QI, QJ, LipschitzQuat

G = GaussianInt
BOX3 = box("gauss", 3)

small = st.integers(-2, 2)
nonzero = st.builds(G, small, small).filter(bool)
elem = st.builds(G, st.integers(-4, 4), st.integers(-4, 4))
leaves = st.one_of(
    st.builds(Ideal, nonzero),
    st.builds(Residue, nonzero, elem),
    st.just(Everything()),
    st.just(Nothing()),
)
descriptions = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.builds(Union, inner, inner),
        st.builds(Intersection, inner, inner),
        st.builds(Complement, inner),
        st.builds(Translate, elem, inner),
        st.builds(Dilate, nonzero, inner),
        st.builds(LeftPreimage, nonzero, inner),
        st.builds(RightPreimage, nonzero, inner),
    ),
    max_leaves=6,
)


def test_member_examples():
    assert member(Ideal(2), 4)
    assert member(translate(Ideal(2), 1), 1)
    assert not member(left_preimage(Ideal(G(1, 1)), G(0, 1)), 1)
    assert member(left_preimage(Ideal(2), 3), 2)
    assert not member(dilate(Ideal(1), 2), 3)


def test_translate_by_zero_is_identity():
    a = parse_description("residue(2+i; 1) | ideal(3)")
    assert membership_equal(translate(a, 0), a, BOX3)


def test_zero_multipliers_rejected():
    for make in (dilate, left_preimage, right_preimage):
        with pytest.raises(ValueError):
            make(Ideal(2), 0)
    with pytest.raises(ValueError):
        Ideal(0)


@given(descriptions, elem)
def test_text_round_trip(desc, s):
    again = parse_description(str(desc))
    assert again == desc
    assert str(again) == str(desc)
    assert again.contains(s) == desc.contains(s)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("ideal(2) | ideal(3) & !ideal(5)", Union(Ideal(2), Intersection(Ideal(3), Complement(Ideal(5))))),
        ("(ideal(2) | ideal(3)) & all", Intersection(Union(Ideal(2), Ideal(3)), Everything())),
        ("shift(1+i) lpre(2) ideal(3)", Translate(G(1, 1), LeftPreimage(2, Ideal(3)))),
        ("residue(2+i; -1)", Residue(G(2, 1), -1)),
        ("!!none", Complement(Complement(Nothing()))),
    ],
)
def test_parse_precedence(text, expected):
    assert parse_description(text) == expected


@pytest.mark.parametrize("text", ["", "ideal(", "ideal(0)", "ideal(2) &", "foo", "ideal(2))", "residue(3)", "dilate(0) all"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_description(text)


@settings(max_examples=60)
@given(descriptions)
def test_evaluator_matches_materialization(desc):
    members = oracles.materialize(desc, 3)
    for y in BOX3:
        assert desc.contains(y) == ((y.re, y.im) in members)


@given(descriptions, nonzero, elem)
def test_dilate_image_duality(a, z, y):
    assert member(dilate(a, z), z * y) == member(a, y)


@given(nonzero)
def test_preimage_of_dilated_ring_is_everything(z):
    assert membership_equal(left_preimage(dilate(Ideal(1), z), z), Everything(), BOX3)


def test_translate_of_ideal_is_ideal_iff_shift_in_ideal():
    zs = [G(a, b) for a in range(-5, 6) for b in range(-5, 6) if 0 < a * a + b * b <= 25]
    shifts = [G(a, b) for a in range(-10, 11) for b in range(-10, 11)]
    for z in zs:
        ideal = Ideal(z)
        for s in shifts:
            assert membership_equal(translate(ideal, s), ideal, BOX3) == member(ideal, s)


def test_quaternion_descriptions():
    two = Ideal(2)
    assert member(two, LipschitzQuat(2, -4, 0, 6)) and not member(two, LipschitzQuat(2, 1))
    assert member(left_preimage(two, LipschitzQuat(1, 1)), LipschitzQuat(1, 1))
    assert member(dilate(Ideal(1), 2), LipschitzQuat(0, 2, 2))
    with pytest.raises(ValueError):
        member(dilate(Ideal(1), LipschitzQuat(1, 1)), LipschitzQuat(2))
    # a non-central modulus: both sides must divide
    a = LipschitzQuat(1, 2)
    assert not member(Ideal(a), QJ * a)
    assert member(Residue(a, 0), QJ * a)
    assert member(Ideal(a), a * 5)


def test_j_witness_examples():
    zeros = Sequence.from_rule(lambda n: 0, 50)
    c, h = find_j_witness([zeros], Ideal(2))
    assert c == 0 and h == IndexSet((1,))
    ones = Sequence.from_rule(lambda n: 1, 50)
    assert find_j_witness([ones], Ideal(3)) == (0, IndexSet((1, 2, 3)))
    odd = Sequence.from_rule(lambda n: 2 * n - 1, 50)
    c, h = find_j_witness([ones, odd], Ideal(2), a_radius=1, h_range=4)
    assert all((c + f.block_sum(h)) % 2 == 0 for f in (ones, odd))


def test_j_witness_not_found_and_empty_family():
    ones = Sequence.from_rule(lambda n: 1, 50)
    with pytest.raises(SearchExhausted) as info:
        find_j_witness([ones], Nothing(), a_radius=1, h_range=3)
    assert info.value.stats["candidates"] == 3 * 7
    with pytest.raises(ValueError):
        find_j_witness([], Ideal(2))


def test_gaussian_j_witness_uses_shifts():
    f = Sequence.from_rule(lambda n: G(0, 1), 20)
    c, h = find_j_witness([f], Residue(G(2), G(1, 0)), a_radius=1, h_range=2)
    assert f.block_sum(h) + c - 1 in {G(2) * q for q in box("gauss", 3)}
