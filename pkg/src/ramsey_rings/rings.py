"""Uniform helpers over the three coefficient rings: Z, Z[i] and L.

Plain ``int`` values are accepted everywhere and promoted on contact with a
richer element (int -> GaussianInt -> LipschitzQuat).
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import ParseError
from .gaussian import GaussianInt, gi_reduce, parse_terms
from .quaternion import LipschitzQuat, q_left_divrem, q_right_divrem, q_two_sided_divides

Element = Union[int, GaussianInt, LipschitzQuat]

KINDS = ("int", "gauss", "quat")
_RANK = {"int": 0, "gauss": 1, "quat": 2}


def kind_of(x: Element) -> str:
    if isinstance(x, LipschitzQuat):
        return "quat"
    if isinstance(x, GaussianInt):
        return "gauss"
    if isinstance(x, int) and not isinstance(x, bool):
        return "int"
    raise TypeError(f"not a ring element: {x!r}")


def common_kind(*xs: Element) -> str:
    return max((kind_of(x) for x in xs), key=_RANK.__getitem__, default="int")


def coerce(x: Element, kind: str) -> Element:
    if kind == "quat":
        return LipschitzQuat.coerce(x)
    if kind == "gauss":
        if isinstance(x, LipschitzQuat):
            raise TypeError(f"{x} is not a Gaussian integer")
        return GaussianInt.coerce(x)
    if kind == "int":
        if kind_of(x) == "int":
            return x
        if is_rational(x):
            return coords(x)[0]
        raise TypeError(f"{x} is not a rational integer")
    raise ValueError(f"unknown ring {kind!r}")


def coords(x: Element) -> tuple[int, int, int, int]:
    if isinstance(x, LipschitzQuat):
        return x.coords
    if isinstance(x, GaussianInt):
        return (x.re, x.im, 0, 0)
    return (x, 0, 0, 0)


def element_key(x: Element) -> tuple[int, int, int, int]:
    """Total order used for every canonical listing of values."""
    return coords(x)


def sorted_values(values: Iterable[Element]) -> list[Element]:
    return sorted(values, key=element_key)


def is_rational(x: Element) -> bool:
    c = coords(x)
    return c[1] == 0 and c[2] == 0 and c[3] == 0


def zero(kind: str) -> Element:
    return coerce(0, kind)


def norm(x: Element) -> int:
    if isinstance(x, (GaussianInt, LipschitzQuat)):
        return x.norm()
    return x * x


def parse_element(text: str, kind: str | None = None) -> Element:
    """Parse "7+2i", "-3i", "1+i+j+k", "5"; the ring is inferred unless given."""
    t = parse_terms(text)
    if t["j"] or t["k"]:
        x: Element = LipschitzQuat(t[""], t["i"], t["j"], t["k"])
    elif t["i"] or "i" in text:
        x = GaussianInt(t[""], t["i"])
    else:
        x = t[""]
    if kind is not None:
        try:
            x = coerce(x, kind)
        except TypeError as exc:
            raise ParseError(str(exc)) from None
    return x


def format_element(x: Element) -> str:
    return str(x)


def class_count(z: Element, kind: str | None = None) -> int:
    """Number of residue classes modulo the ideal targeted by :func:`residue`."""
    kind = kind or kind_of(z)
    z = coerce(z, kind)
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    if kind == "int":
        return abs(z)
    if kind == "gauss":
        return z.norm()
    return z.norm() ** 2


def residue(x: Element, z: Element, side: str = "left") -> Element:
    """Canonical representative of x modulo z.

    For quaternions ``side="left"`` targets z*L (z divides on the left) and
    ``side="right"`` targets L*z.  Rational z gives the same ideal either way.
    """
    kind = common_kind(x, z)
    x, z = coerce(x, kind), coerce(z, kind)
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    if kind == "int":
        return x % abs(z)
    if kind == "gauss":
        return gi_reduce(x, z)
    if side == "left":
        return q_left_divrem(x, z)[1]
    if side == "right":
        return q_right_divrem(x, z)[1]
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def divides(z: Element, x: Element, side: str = "two") -> bool:
    """Ideal membership of x for the ideal generated by z.

    Quaternion sides: "left" is z*L, "right" is L*z, "two" is their
    intersection (equal to both when z is a rational integer).
    """
    kind = common_kind(x, z)
    if kind == "quat" and side == "two":
        return q_two_sided_divides(coerce(z, kind), coerce(x, kind))
    return not residue(x, z, side if kind == "quat" else "left")
