"""Exact arithmetic in the Lipschitz quaternions L = {a+bi+cj+dk : a,b,c,d in Z}.

L is not a Euclidean domain.  Nearest-integer rounding of the exact
quotient still leaves a remainder of norm at most the divisor's norm, which
is enough to make the quotients L/(L*a) and L/(a*L) finite and explicitly
enumerable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Union

from .errors import ParseError
from .gaussian import GaussianInt, format_terms, parse_terms, round_half_down

_UNITS = ("", "i", "j", "k")


@dataclass(frozen=True, slots=True)
class LipschitzQuat:
    a: int
    b: int = 0
    c: int = 0
    d: int = 0

    @classmethod
    def coerce(cls, x: Union[int, GaussianInt, LipschitzQuat]) -> LipschitzQuat:
        if isinstance(x, LipschitzQuat):
            return x
        if isinstance(x, GaussianInt):
            return cls(x.re, x.im)
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x)
        raise TypeError(f"cannot treat {x!r} as a Lipschitz quaternion")

    @classmethod
    def parse(cls, text: str) -> LipschitzQuat:
        t = parse_terms(text)
        return cls(t[""], t["i"], t["j"], t["k"])

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return format_terms(list(self.coords), _UNITS)

    def __repr__(self) -> str:
        return f"LipschitzQuat({self.a}, {self.b}, {self.c}, {self.d})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LipschitzQuat):
            return self.coords == other.coords
        if isinstance(other, int):
            return self.coords == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0 and self.c == 0 and self.d == 0:
            return hash(self.a)
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __neg__(self) -> LipschitzQuat:
        return LipschitzQuat(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other):
        if isinstance(other, int):
            return LipschitzQuat(self.a + other, self.b, self.c, self.d)
        if isinstance(other, (LipschitzQuat, GaussianInt)):
            o = LipschitzQuat.coerce(other)
            return LipschitzQuat(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, LipschitzQuat, GaussianInt)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, GaussianInt)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return LipschitzQuat(self.a * other, self.b * other, self.c * other, self.d * other)
        if isinstance(other, (LipschitzQuat, GaussianInt)):
            return q_mul(self, LipschitzQuat.coerce(other))
        return NotImplemented

    def __rmul__(self, other):
        # other is on the left; the product does not commute
        if isinstance(other, int):
            return self * other
        if isinstance(other, GaussianInt):
            return q_mul(LipschitzQuat.coerce(other), self)
        return NotImplemented

    def conj(self) -> LipschitzQuat:
        return LipschitzQuat(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def sort_key(self) -> tuple[int, int, int, int]:
        return self.coords


ONE = LipschitzQuat(1)
QI = LipschitzQuat(0, 1)
QJ = LipschitzQuat(0, 0, 1)
QK = LipschitzQuat(0, 0, 0, 1)


def q_mul(x: LipschitzQuat, y: LipschitzQuat) -> LipschitzQuat:
    """Hamilton product x*y."""
    a1, b1, c1, d1 = x.coords
    a2, b2, c2, d2 = y.coords
    return LipschitzQuat(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def q_norm(x: LipschitzQuat) -> int:
    return LipschitzQuat.coerce(x).norm()


def _round_quotient(t: LipschitzQuat, n: int) -> LipschitzQuat:
    return LipschitzQuat(*(round_half_down(c, n) for c in t.coords))


def q_right_divrem(x: LipschitzQuat, a: LipschitzQuat) -> tuple[LipschitzQuat, LipschitzQuat]:
    """``x = q*a + r`` with norm(r) <= norm(a).

    r depends only on the class of x modulo the left ideal L*a.
    """
    x = LipschitzQuat.coerce(x)
    a = LipschitzQuat.coerce(a)
    n = a.norm()
    if n == 0:
        raise ZeroDivisionError("quaternion division by zero")
    q = _round_quotient(q_mul(x, a.conj()), n)
    return q, x - q_mul(q, a)


def q_left_divrem(x: LipschitzQuat, a: LipschitzQuat) -> tuple[LipschitzQuat, LipschitzQuat]:
    """``x = a*q + r`` with norm(r) <= norm(a); r is a class function mod a*L."""
    x = LipschitzQuat.coerce(x)
    a = LipschitzQuat.coerce(a)
    n = a.norm()
    if n == 0:
        raise ZeroDivisionError("quaternion division by zero")
    q = _round_quotient(q_mul(a.conj(), x), n)
    return q, x - q_mul(a, q)


def q_right_divides(b: LipschitzQuat, x: LipschitzQuat) -> bool:
    """True iff x lies in L*b."""
    return not q_right_divrem(x, b)[1]


def q_left_divides(a: LipschitzQuat, x: LipschitzQuat) -> bool:
    """True iff x lies in a*L."""
    return not q_left_divrem(x, a)[1]


def q_two_sided_divides(z: LipschitzQuat, x: LipschitzQuat) -> bool:
    """True iff x lies in z*L and in L*z (a single ideal when z is rational)."""
    z = LipschitzQuat.coerce(z)
    if z.is_rational():
        if z.a == 0:
            raise ZeroDivisionError("quaternion division by zero")
        return all(c % z.a == 0 for c in LipschitzQuat.coerce(x).coords)
    return q_left_divides(z, x) and q_right_divides(z, x)


def norm_ball(n: int) -> list[LipschitzQuat]:
    """Every quaternion of norm at most n."""
    r = isqrt(n)
    out = []
    for a in range(-r, r + 1):
        ra = n - a * a
        rb = isqrt(ra)
        for b in range(-rb, rb + 1):
            rc_ = ra - b * b
            rc = isqrt(rc_)
            for c in range(-rc, rc + 1):
                rd = isqrt(rc_ - c * c)
                for d in range(-rd, rd + 1):
                    out.append(LipschitzQuat(a, b, c, d))
    return out


def _reps(a: LipschitzQuat, divrem) -> list[LipschitzQuat]:
    a = LipschitzQuat.coerce(a)
    n = a.norm()
    if n == 0:
        raise ZeroDivisionError("coset representatives modulo zero")
    # canonical remainders have norm <= n and reduce to themselves
    reps = {divrem(x, a)[1] for x in norm_ball(n)}
    out = sorted(reps, key=LipschitzQuat.sort_key)
    assert len(out) == n * n, (a, len(out))
    return out


def q_left_coset_reps(a: LipschitzQuat) -> list[LipschitzQuat]:
    """A transversal of the left ideal L*a in L; it has norm(a)**2 elements."""
    return _reps(a, q_right_divrem)


def q_right_coset_reps(a: LipschitzQuat) -> list[LipschitzQuat]:
    """A transversal of the right ideal a*L, by the mirrored construction."""
    return _reps(a, q_left_divrem)
