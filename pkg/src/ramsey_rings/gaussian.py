"""Exact arithmetic in the Gaussian integers Z[i]."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt
from typing import Union

from .errors import ParseError

_TERM = re.compile(r"([+-]?)(\d*)([ijk]?)")


def round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den, ties toward negative infinity. den > 0."""
    return -((den - 2 * num) // (2 * den))


def parse_terms(text: str) -> dict[str, int]:
    """Split "a+bi+cj+dk"-style text into unit -> coefficient.

    Units are "" (the real part), "i", "j" and "k". Repeated units add up.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty element")
    out = {"": 0, "i": 0, "j": 0, "k": 0}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse element {text!r}")
        sign, digits, unit = m.groups()
        if not digits and not unit:
            raise ParseError(f"cannot parse element {text!r}")
        if pos > 0 and not sign:
            raise ParseError(f"missing sign between terms in {text!r}")
        coeff = int(digits) if digits else 1
        out[unit] += -coeff if sign == "-" else coeff
        pos = m.end()
    return out


def format_terms(coeffs: list[int], units: tuple[str, ...]) -> str:
    parts = []
    for c, u in zip(coeffs, units):
        if c == 0:
            continue
        mag = abs(c)
        body = u if (mag == 1 and u) else f"{mag}{u}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """An element re + im*i of Z[i] with unbounded integer coordinates."""

    re: int
    im: int = 0

    @classmethod
    def coerce(cls, x: Union[int, GaussianInt]) -> GaussianInt:
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x, 0)
        raise TypeError(f"cannot treat {x!r} as a Gaussian integer")

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        t = parse_terms(text)
        if t["j"] or t["k"]:
            raise ParseError(f"{text!r} is not a Gaussian integer")
        return cls(t[""], t["i"])

    def __str__(self) -> str:
        return format_terms([self.re, self.im], ("", "i"))

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        # agree with hash(int) so that 3 and GaussianInt(3) collapse in sets
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (GaussianInt, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def sort_key(self) -> tuple[int, int]:
        return (self.re, self.im)


I = GaussianInt(0, 1)


def gi_norm(x: GaussianInt) -> int:
    return GaussianInt.coerce(x).norm()


def gi_divrem(x: GaussianInt, z: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``x = q*z + r`` with ``norm(r) < norm(z)``.

    The quotient is the exact x*conj(z)/norm(z) rounded coordinate-wise to
    the nearest integer, ties toward negative infinity, so the remainder is
    a function of the class of x modulo z and norm(r) <= norm(z)/2.
    """
    x = GaussianInt.coerce(x)
    z = GaussianInt.coerce(z)
    n = z.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = x * z.conj()
    q = GaussianInt(round_half_down(t.re, n), round_half_down(t.im, n))
    return q, x - q * z


def gi_divides(z: GaussianInt, x: GaussianInt) -> bool:
    return not gi_divrem(x, z)[1]


def gi_reduce(x: GaussianInt, z: GaussianInt) -> GaussianInt:
    """Canonical representative of the class of x modulo z."""
    return gi_divrem(x, z)[1]


def gi_coset_reps(z: GaussianInt) -> list[GaussianInt]:
    """All canonical remainders modulo z, in lexicographic (re, im) order.

    Each remainder has modulus at most |z|/sqrt(2) and reduces to itself, so
    reducing the square of half-side isqrt(norm(z)) + 1 catches every one.
    """
    z = GaussianInt.coerce(z)
    n = z.norm()
    if n == 0:
        raise ZeroDivisionError("coset representatives modulo zero")
    r = isqrt(n) + 1
    reps = {
        gi_reduce(GaussianInt(a, b), z)
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
    }
    out = sorted(reps, key=GaussianInt.sort_key)
    assert len(out) == n, (z, len(out))
    return out
