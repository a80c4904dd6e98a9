"""Decidable descriptions of candidate large sets and their membership test.

A description is an immutable expression tree.  Atoms are residue classes
and ideals; combinators are the boolean operations plus the set transforms

    shift(s)A = -s + A = {y : s + y in A}
    dilate(z)A = z*A   = {z*y : y in A}
    lpre(a)A  = a^-1 A = {y : a*y in A}
    rpre(b)A  = A b^-1 = {y : y*b in A}

Membership is decided by structural recursion, so it always terminates.
Nothing here certifies largeness (central, IP*, ...); descriptions are only
membership oracles.

Text grammar (``|`` binds loosest, then ``&``, then the prefix forms)::

    expr   := term ("|" term)*
    term   := factor ("&" factor)*
    factor := "!" factor | OP "(" elem ")" factor | atom | "(" expr ")"
    OP     := "shift" | "dilate" | "lpre" | "rpre"
    atom   := "ideal(" elem ")" | "residue(" elem ";" elem ")" | "all" | "none"
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence as Seq

from .configs import IndexSet, Sequence, as_sequence
from .errors import ParseError, SearchExhausted
from .gaussian import GaussianInt, gi_divrem
from .quaternion import LipschitzQuat
from .rings import Element, coerce, common_kind, divides, element_key, is_rational, norm, parse_element


class SetDescription:
    """Base class of all description nodes."""

    prec = 4

    def contains(self, s: Element) -> bool:
        raise NotImplementedError

    def __contains__(self, s: Element) -> bool:
        return self.contains(s)

    def __and__(self, other: SetDescription) -> SetDescription:
        return Intersection(self, other)

    def __or__(self, other: SetDescription) -> SetDescription:
        return Union(self, other)

    def __invert__(self) -> SetDescription:
        return Complement(self)

    def depth(self) -> int:
        return 1


def _nonzero(x: Element, what: str) -> Element:
    if not x:
        raise ValueError(f"{what} must be nonzero")
    return x


@dataclass(frozen=True)
class Everything(SetDescription):
    def contains(self, s):
        return True

    def __str__(self):
        return "all"


@dataclass(frozen=True)
class Nothing(SetDescription):
    def contains(self, s):
        return False

    def __str__(self):
        return "none"


@dataclass(frozen=True)
class Ideal(SetDescription):
    """z*R; for quaternions the two-sided z*L (intersected with L*z if z is not rational)."""

    modulus: Element

    def __post_init__(self):
        _nonzero(self.modulus, "ideal modulus")

    def contains(self, s):
        return divides(self.modulus, s, "two")

    def __str__(self):
        return f"ideal({self.modulus})"


@dataclass(frozen=True)
class Residue(SetDescription):
    """rep + modulus*R; for quaternions the left coset rep + L*modulus."""

    modulus: Element
    rep: Element

    def __post_init__(self):
        _nonzero(self.modulus, "residue modulus")

    def contains(self, s):
        return divides(self.modulus, s - self.rep, "right")

    def __str__(self):
        return f"residue({self.modulus}; {self.rep})"


@dataclass(frozen=True)
class Union(SetDescription):
    left: SetDescription
    right: SetDescription
    prec = 1

    def contains(self, s):
        return self.left.contains(s) or self.right.contains(s)

    def __str__(self):
        return f"{_wrap(self.left, 1)} | {_wrap(self.right, 2)}"

    def depth(self):
        return 1 + max(self.left.depth(), self.right.depth())


@dataclass(frozen=True)
class Intersection(SetDescription):
    left: SetDescription
    right: SetDescription
    prec = 2

    def contains(self, s):
        return self.left.contains(s) and self.right.contains(s)

    def __str__(self):
        return f"{_wrap(self.left, 2)} & {_wrap(self.right, 3)}"

    def depth(self):
        return 1 + max(self.left.depth(), self.right.depth())


class _Unary(SetDescription):
    prec = 3

    def depth(self):
        return 1 + self.inner.depth()


@dataclass(frozen=True)
class Complement(_Unary):
    inner: SetDescription

    def contains(self, s):
        return not self.inner.contains(s)

    def __str__(self):
        return "!" + _wrap(self.inner, 3)


@dataclass(frozen=True)
class Translate(_Unary):
    shift: Element
    inner: SetDescription

    def contains(self, y):
        return self.inner.contains(self.shift + y)

    def __str__(self):
        return f"shift({self.shift})" + _wrap(self.inner, 3)


@dataclass(frozen=True)
class Dilate(_Unary):
    factor: Element
    inner: SetDescription

    def __post_init__(self):
        _nonzero(self.factor, "dilation factor")

    def contains(self, y):
        q = exact_quotient(y, self.factor)
        return q is not None and self.inner.contains(q)

    def __str__(self):
        return f"dilate({self.factor})" + _wrap(self.inner, 3)


@dataclass(frozen=True)
class LeftPreimage(_Unary):
    factor: Element
    inner: SetDescription

    def __post_init__(self):
        _nonzero(self.factor, "multiplier")

    def contains(self, y):
        return self.inner.contains(self.factor * y)

    def __str__(self):
        return f"lpre({self.factor})" + _wrap(self.inner, 3)


@dataclass(frozen=True)
class RightPreimage(_Unary):
    factor: Element
    inner: SetDescription

    def __post_init__(self):
        _nonzero(self.factor, "multiplier")

    def contains(self, y):
        return self.inner.contains(y * self.factor)

    def __str__(self):
        return f"rpre({self.factor})" + _wrap(self.inner, 3)


def _wrap(node: SetDescription, min_prec: int) -> str:
    text = str(node)
    return text if node.prec >= min_prec else f"({text})"


def exact_quotient(y: Element, z: Element) -> Element | None:
    """y/z when z divides y exactly, else None.

    Quaternion dilation is only defined for rational-integer z, where left
    and right quotients agree.
    """
    kind = common_kind(y, z)
    y, z = coerce(y, kind), coerce(z, kind)
    if kind == "int":
        return y // z if y % z == 0 else None
    if kind == "gauss":
        q, r = gi_divrem(y, z)
        return None if r else q
    if not is_rational(z):
        raise ValueError(f"quaternion dilation needs a rational-integer factor, got {z}")
    n = z.a
    if any(c % n for c in y.coords):
        return None
    return LipschitzQuat(*(c // n for c in y.coords))


# -- operations -------------------------------------------------------------


def member(a: SetDescription, s: Element) -> bool:
    return a.contains(s)


def translate(a: SetDescription, s: Element) -> SetDescription:
    """B with member(B, y) == member(A, s + y)."""
    return Translate(s, a)


def dilate(a: SetDescription, z: Element) -> SetDescription:
    return Dilate(z, a)


def left_preimage(a: SetDescription, factor: Element) -> SetDescription:
    return LeftPreimage(factor, a)


def right_preimage(a: SetDescription, factor: Element) -> SetDescription:
    return RightPreimage(factor, a)


def intersect_all(parts: Iterable[SetDescription]) -> SetDescription:
    out: SetDescription | None = None
    for p in parts:
        out = p if out is None else Intersection(out, p)
    return Everything() if out is None else out


def box(kind: str, radius: int) -> list[Element]:
    """All elements with every coordinate in [-radius, radius], small norms first."""
    r = range(-radius, radius + 1)
    if kind == "int":
        pts: list[Element] = list(r)
    elif kind == "gauss":
        pts = [GaussianInt(a, b) for a, b in product(r, r)]
    elif kind == "quat":
        pts = [LipschitzQuat(*c) for c in product(r, r, r, r)]
    else:
        raise ValueError(f"unknown ring {kind!r}")
    return sorted(pts, key=lambda x: (norm(x), element_key(x)))


def membership_equal(a: SetDescription, b: SetDescription, points: Iterable[Element]) -> bool:
    """Extensional equality on a finite set of points."""
    return all(a.contains(p) == b.contains(p) for p in points)


def index_sets(h_range: int) -> Iterator[IndexSet]:
    """Nonempty subsets of {1..h_range} ordered by (max, size, lexicographic)."""
    for mx in range(1, h_range + 1):
        for size in range(1, mx + 1):
            for rest in combinations(range(1, mx), size - 1):
                yield IndexSet(rest + (mx,))


def find_j_witness(
    family: Seq[Sequence | Iterable[Element]],
    a: SetDescription,
    a_radius: int = 2,
    h_range: int = 8,
    kind: str | None = None,
) -> tuple[Element, IndexSet]:
    """Search for (c, H) with c + sum_{t in H} f(t) in A for every f.

    Shifts c are tried in order of increasing norm, and for each shift the
    index sets in (max, size) order.  Exhausting the bounds raises
    :class:`SearchExhausted`; that says nothing about whether A is a J-set.
    """
    fam = [as_sequence(f) for f in family]
    if not fam:
        raise ValueError("the family of sequences is empty")
    h_range = min([h_range] + [f.bound for f in fam])
    if kind is None:
        kind = common_kind(*(f[1] for f in fam)) if h_range else "int"
    hs = list(index_sets(h_range))
    sums = [[f.block_sum(h) for f in fam] for h in hs]
    tried = 0
    for c in box(kind, a_radius):
        for h, row in zip(hs, sums):
            tried += 1
            if all(a.contains(c + s) for s in row):
                return c, h
    raise SearchExhausted(
        f"no witness with shifts of radius {a_radius} and H within 1..{h_range}",
        candidates=tried,
    )


# -- parsing ----------------------------------------------------------------

_PREFIX = {"shift": Translate, "dilate": Dilate, "lpre": LeftPreimage, "rpre": RightPreimage}


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def element(self, stop: str) -> Element:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stop:
            self.pos += 1
        raw = self.text[start:self.pos].replace(" ", "")
        try:
            return parse_element(raw)
        except ParseError as exc:
            raise self.error(str(exc)) from None

    def expr(self) -> SetDescription:
        node = self.term()
        while self.peek() == "|":
            self.pos += 1
            node = Union(node, self.term())
        return node

    def term(self) -> SetDescription:
        node = self.factor()
        while self.peek() == "&":
            self.pos += 1
            node = Intersection(node, self.factor())
        return node

    def factor(self) -> SetDescription:
        ch = self.peek()
        if ch == "!":
            self.pos += 1
            return Complement(self.factor())
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        name = self.word()
        try:
            if name in _PREFIX:
                self.expect("(")
                arg = self.element(")")
                self.expect(")")
                return _PREFIX[name](arg, self.factor())
            if name == "ideal":
                self.expect("(")
                z = self.element(")")
                self.expect(")")
                return Ideal(z)
            if name == "residue":
                self.expect("(")
                z = self.element(";)")
                self.expect(";")
                r = self.element(")")
                self.expect(")")
                return Residue(z, r)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise self.error(str(exc)) from None
        if name == "all":
            return Everything()
        if name == "none":
            return Nothing()
        raise self.error(f"unexpected {name or ch!r}")


def parse_description(text: str) -> SetDescription:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise p.error("trailing input")
    return node
