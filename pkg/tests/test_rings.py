import pytest
from hypothesis import given, strategies as st

from ramsey_rings.errors import ParseError
from ramsey_rings.gaussian import GaussianInt
from ramsey_rings.quaternion import QJ, LipschitzQuat
from ramsey_rings.rings import (
    class_count,
    coerce,
    common_kind,
    divides,
    kind_of,
    parse_element,
    residue,
    sorted_values,
)


def test_parse_infers_ring():
    assert kind_of(parse_element("5")) == "int"
    assert kind_of(parse_element("0i")) == "gauss"
    assert parse_element("2-i") == GaussianInt(2, -1)
    assert parse_element("1+i+j+k") == LipschitzQuat(1, 1, 1, 1)
    assert kind_of(parse_element("3", "quat")) == "quat"
    with pytest.raises(ParseError):
        parse_element("1+j", "gauss")
    for bad in ("", "1++i", "2x", "i1"):
        with pytest.raises(ParseError):
            parse_element(bad)


def test_promotion_and_equality_across_rings():
    assert common_kind(1, GaussianInt(0, 1)) == "gauss"
    assert common_kind(GaussianInt(1), QJ) == "quat"
    assert coerce(GaussianInt(2, 3), "quat") == LipschitzQuat(2, 3)
    assert {3, GaussianInt(3), LipschitzQuat(3)} == {3}
    with pytest.raises(TypeError):
        coerce(GaussianInt(1, 1), "int")


def test_class_count():
    assert class_count(-6) == 6
    assert class_count(GaussianInt(2, 1)) == 5
    assert class_count(LipschitzQuat(1, 1)) == 4
    assert class_count(2, "quat") == 16
    with pytest.raises(ZeroDivisionError):
        class_count(0)


def test_residue_sides():
    a = LipschitzQuat(1, 2)
    x = QJ * a
    assert not residue(x, a, "right")
    assert residue(x, a, "left")
    assert divides(a, x, "right") and not divides(a, x, "left") and not divides(a, x, "two")
    with pytest.raises(ValueError):
        residue(x, a, "middle")


@given(st.integers(-10**6, 10**6), st.integers(1, 50))
def test_integer_residue(x, z):
    assert residue(x, z) == x % z
    assert divides(z, x) == (x % z == 0)


def test_sorted_values_is_coordinate_order():
    vals = [GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(1, -1)]
    assert [str(v) for v in sorted_values(vals)] == ["-1", "i", "1-i", "1"]
