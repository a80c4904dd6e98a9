"""Finite partition searches: Schur triples, Hindman FS witnesses, PS/PP cells."""

from __future__ import annotations

import json
import os
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .configs import pp, ps
from .errors import CapExceeded, OutOfDomain, ParseError, RepeatedTerms, SearchExhausted
from .gaussian import GaussianInt, gi_coset_reps, gi_reduce
from .large_sets import box
from .rings import Element, coords, element_key, kind_of, parse_element, sorted_values

DEFAULT_MAX_ENUM = 2**24
MAX_COLORS = 4


def max_enum() -> int:
    """Enumeration cap; RAMSEY_RINGS_MAX_ENUM overrides the default 2**24."""
    raw = os.environ.get("RAMSEY_RINGS_MAX_ENUM")
    if not raw:
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"RAMSEY_RINGS_MAX_ENUM must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("RAMSEY_RINGS_MAX_ENUM must be positive")
    return value


# -- colorings --------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A finite coloring: a color (small int) for each element of a finite domain."""

    colors: Mapping[Element, int]

    @property
    def domain(self) -> list[Element]:
        return sorted_values(self.colors)

    def __contains__(self, x: Element) -> bool:
        return x in self.colors

    def __getitem__(self, x: Element) -> int:
        try:
            return self.colors[x]
        except KeyError:
            raise OutOfDomain(f"{x} is outside the coloring domain") from None

    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    @classmethod
    def from_function(cls, domain: Iterable[Element], fn) -> Coloring:
        return cls({x: fn(x) for x in domain})

    @classmethod
    def from_json(cls, data: Mapping[str, int] | str) -> Coloring:
        """From {"1": 0, "2": 1, ...} or {"1+i": 0, ...}, given as a dict or JSON text."""
        if isinstance(data, str):
            data = json.loads(data)
        return cls({parse_element(k): int(v) for k, v in data.items()})

    def to_json(self) -> dict[str, int]:
        return {str(x): self.colors[x] for x in self.domain}


def interval(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


def family_coloring(spec: str, domain: Iterable[Element]) -> Coloring:
    """Built-in families: ``constant``, ``parity``, ``residue:M``, ``random:SEED[:COLORS]``.

    ``parity`` on Z[i] is the class modulo 1+i, i.e. (re + im) mod 2.
    ``residue:M`` colors by residue class modulo M (an element of the domain's ring).
    """
    domain = list(domain)
    name, _, arg = spec.partition(":")
    if name == "constant":
        return Coloring.from_function(domain, lambda x: 0)
    if name == "parity":
        return Coloring.from_function(domain, lambda x: sum(coords(x)) % 2)
    if name == "residue":
        if not arg:
            raise ParseError("residue coloring needs a modulus, e.g. residue:3")
        m = parse_element(arg)
        if kind_of(m) == "int" and all(kind_of(x) == "int" for x in domain):
            if m == 0:
                raise ZeroDivisionError("residue modulus must be nonzero")
            return Coloring.from_function(domain, lambda x: x % abs(m))
        reps = {r: n for n, r in enumerate(gi_coset_reps(GaussianInt.coerce(m)))}
        return Coloring.from_function(domain, lambda x: reps[gi_reduce(x, m)])
    if name == "random":
        seed_text, _, ncol = arg.partition(":")
        rng = random.Random(int(seed_text or 0))
        c = int(ncol or 2)
        return Coloring({x: rng.randrange(c) for x in sorted_values(domain)})
    raise ParseError(f"unknown coloring family {spec!r}")


# -- Schur ------------------------------------------------------------------


@dataclass(frozen=True)
class SchurReport:
    n: int
    colors: int
    forced: bool
    coloring: tuple[int, ...] | None
    nodes: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "colors": self.colors,
            "result": "forced" if self.forced else "avoidable",
            "coloring": None if self.coloring is None else list(self.coloring),
            "nodes": self.nodes,
        }


def schur_search(n: int, colors: int = 2) -> SchurReport:
    """Decide whether every coloring of {1..n} has a monochromatic x, y, x+y.

    x = y is allowed (two distinct indices may carry equal values).  The
    search walks colorings colexicographically (color of n most significant)
    with the color of 1 fixed to 0, pruning any partial coloring that already
    contains a monochromatic triple; the avoiding coloring it returns is the
    colex-least one.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 2 <= colors <= MAX_COLORS:
        raise ValueError(f"colors must be between 2 and {MAX_COLORS}")
    cap = max_enum()
    if colors**n > cap:
        raise CapExceeded(f"{colors}^{n} colorings exceed the enumeration cap {cap}")

    col = [0] * (n + 1)
    nodes = 0

    def ok(p: int) -> bool:
        # triples whose smallest element is p; everything above p is colored
        c = col[p]
        for y in range(p, n - p + 1):
            if col[y] == c and col[p + y] == c:
                return False
        return True

    def place(p: int) -> bool:
        nonlocal nodes
        if p == 0:
            return True
        for c in range(1 if p == 1 else colors):
            nodes += 1
            col[p] = c
            if ok(p) and place(p - 1):
                return True
        return False

    found = place(n)
    return SchurReport(n, colors, not found, tuple(col[1:]) if found else None, nodes)


# -- Hindman ----------------------------------------------------------------


@dataclass(frozen=True)
class HindmanWitness:
    terms: tuple[Element, ...]
    color: int
    fs: tuple[Element, ...]

    def to_dict(self) -> dict:
        return {
            "terms": [str(t) for t in self.terms],
            "color": self.color,
            "fs": [str(v) for v in self.fs],
        }


def hindman_witness(coloring: Coloring, k: int, max_nodes: int = 10**6) -> HindmanWitness:
    """Find x_1 < ... < x_k (domain order) whose 2^k - 1 subset sums are
    pairwise distinct, inside the domain and all of one color.

    Requiring distinct sums keeps the witness a genuine k-term FS set rather
    than one that collapses (1, 2, 3 has 1 + 2 = 3).
    """
    if k < 1:
        raise ValueError("k must be positive")
    domain = coloring.domain
    nodes = 0

    def grow(start: int, chosen: list, sums: set, color: int):
        nonlocal nodes
        if len(chosen) == k:
            return chosen
        for pos in range(start, len(domain)):
            x = domain[pos]
            nodes += 1
            if nodes > max_nodes:
                raise SearchExhausted("node budget exhausted", nodes=nodes)
            if x not in coloring or (chosen and coloring[x] != color):
                continue
            new = [x] + [s + x for s in sums]
            if len(set(new)) != len(new) or any(v in sums for v in new):
                continue
            if any(v not in coloring or coloring[v] != coloring[x] for v in new):
                continue
            found = grow(pos + 1, chosen + [x], sums | set(new), coloring[x])
            if found:
                return found
        return None

    found = grow(0, [], set(), -1)
    if not found:
        raise SearchExhausted(f"no {k}-term monochromatic FS inside the domain", nodes=nodes)
    sums = set()
    for x in found:
        sums |= {x} | {s + x for s in sums}
    return HindmanWitness(tuple(found), coloring[found[0]], tuple(sorted_values(sums)))


# -- PS / PP ----------------------------------------------------------------


@dataclass(frozen=True)
class PSPPReport:
    monochromatic: bool
    ps: tuple[Element, ...]
    pp: tuple[Element, ...]
    colors: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "monochromatic": self.monochromatic,
            "ps": [str(v) for v in self.ps],
            "pp": [str(v) for v in self.pp],
            "colors": {str(c): n for c, n in sorted(self.colors.items())},
        }


def pspp_check(terms: Iterable[Element], coloring: Coloring) -> PSPPReport:
    """Is PS(terms) | PP(terms) inside one color class?

    ``colors`` counts the distinct values of PS | PP falling in each class.
    """
    terms = list(terms)
    for a, b in combinations(terms, 2):
        if a == b:
            raise RepeatedTerms(f"terms must be pairwise distinct; {a} repeats")
    sums, prods = ps(terms), pp(terms)
    hit = Counter(coloring[v] for v in sums | prods)
    return PSPPReport(
        len(hit) == 1,
        tuple(sorted_values(sums)),
        tuple(sorted_values(prods)),
        dict(hit),
    )


def gaussian_box_domain(radius: int) -> list[GaussianInt]:
    return sorted(box("gauss", radius), key=element_key)
