"""Finite configurations: index sets, sum subsystems and FS/FP/AP/PS/PP sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence as Seq

from .errors import CapExceeded, OrderingViolation, SourceTooShort, TooFewTerms
from .gaussian import I, GaussianInt
from .quaternion import ONE, QI, QJ, QK, LipschitzQuat
from .rings import Element, sorted_values

FS_CAP = 20
AP_CAP = 6


@dataclass(frozen=True, slots=True)
class IndexSet:
    """A nonempty finite set of positive integers, kept sorted."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.indices
        if not idx:
            raise ValueError("index sets are nonempty")
        if idx[0] < 1:
            raise ValueError(f"indices start at 1, got {idx[0]}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {idx}")

    @classmethod
    def of(cls, indices: Iterable[int]) -> IndexSet:
        return cls(tuple(sorted(set(indices))))

    @classmethod
    def interval(cls, lo: int, hi: int) -> IndexSet:
        return cls(tuple(range(lo, hi + 1)))

    @property
    def min(self) -> int:
        return self.indices[0]

    @property
    def max(self) -> int:
        return self.indices[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, n: object) -> bool:
        return n in self.indices

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.indices)) + "}"

    def to_list(self) -> list[int]:
        return list(self.indices)


def check_increasing(blocks: Seq[IndexSet]) -> None:
    for n, (h, g) in enumerate(zip(blocks, blocks[1:]), start=1):
        if not h.max < g.min:
            raise OrderingViolation(f"block {n} {h} does not precede block {n + 1} {g}")


class Sequence:
    """A finite truncation of a sequence x_1, x_2, ... (1-based).

    Either an explicit list of terms or a pure rule ``n -> x_n`` with a
    declared bound.  Reading past the bound raises :class:`SourceTooShort`;
    nothing is ever extrapolated.
    """

    __slots__ = ("_terms", "_rule", "bound", "name")

    def __init__(
        self,
        terms: Iterable[Element] | None = None,
        rule: Callable[[int], Element] | None = None,
        bound: int | None = None,
        name: str | None = None,
    ) -> None:
        if (terms is None) == (rule is None):
            raise ValueError("give exactly one of terms or rule")
        if terms is not None:
            self._terms: tuple[Element, ...] | None = tuple(terms)
            self._rule = None
            self.bound = len(self._terms) if bound is None else min(bound, len(self._terms))
        else:
            if bound is None:
                raise ValueError("a rule-based sequence needs an evaluation bound")
            self._terms = None
            self._rule = rule
            self.bound = bound
        self.name = name

    @classmethod
    def of(cls, terms: Iterable[Element], name: str | None = None) -> Sequence:
        return cls(terms=terms, name=name)

    @classmethod
    def from_rule(cls, rule: Callable[[int], Element], bound: int, name: str | None = None) -> Sequence:
        return cls(rule=rule, bound=bound, name=name)

    def __getitem__(self, n: int) -> Element:
        if not 1 <= n <= self.bound:
            raise SourceTooShort(f"index {n} outside 1..{self.bound}")
        if self._terms is not None:
            return self._terms[n - 1]
        return self._rule(n)

    def __len__(self) -> int:
        return self.bound

    def head(self, k: int) -> list[Element]:
        return [self[n] for n in range(1, k + 1)]

    def block_sum(self, block: Iterable[int]) -> Element:
        it = iter(block)
        total = self[next(it)]
        for n in it:
            total = total + self[n]
        return total

    def __repr__(self) -> str:
        label = self.name or ("list" if self._terms is not None else "rule")
        return f"Sequence({label}, bound={self.bound})"


def as_sequence(x: Sequence | Iterable[Element]) -> Sequence:
    return x if isinstance(x, Sequence) else Sequence.of(x)


@dataclass(frozen=True)
class BlockSystem:
    """A sum subsystem: blocks with max H_n < min H_{n+1} and their sums."""

    blocks: tuple[IndexSet, ...]
    terms: tuple[Element, ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != len(self.terms):
            raise ValueError("blocks and terms differ in length")
        check_increasing(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def truncate(self, depth: int) -> BlockSystem:
        return BlockSystem(self.blocks[:depth], self.terms[:depth])

    def matches(self, source: Sequence) -> bool:
        return all(source.block_sum(h) == y for h, y in zip(self.blocks, self.terms))


def _product(values: Iterable[Element]) -> Element:
    it = iter(values)
    out = next(it)
    for v in it:
        out = out * v
    return out


def _check_len(terms: Seq[Element], cap: int, what: str) -> None:
    if len(terms) < 1:
        raise ValueError(f"{what} needs at least one term")
    if len(terms) > cap:
        raise CapExceeded(f"{what} of {len(terms)} terms exceeds the cap of {cap}")


def fs(terms: Seq[Element], cap: int = FS_CAP) -> frozenset:
    """All sums over nonempty subsets of the terms."""
    terms = list(terms)
    _check_len(terms, cap, "FS")
    out: set = set()
    for t in terms:
        out |= {s + t for s in out}
        out.add(t)
    return frozenset(out)


def fp(terms: Seq[Element], cap: int = FS_CAP) -> frozenset:
    """All products over nonempty subsets, factors in increasing index order."""
    terms = list(terms)
    _check_len(terms, cap, "FP")
    out: set = set()
    for t in terms:
        out |= {s * t for s in out}
        out.add(t)
    return frozenset(out)


def ap_expression_count(k: int) -> int:
    """sum_{j=1..k} k!/(k-j)!"""
    total, falling = 0, 1
    for j in range(k):
        falling *= k - j
        total += falling
    return total


def ap_expressions(terms: Seq[Element], cap: int = AP_CAP) -> Iterator[tuple[tuple[int, ...], Element]]:
    """Yield (order, value) for every ordered product of distinct terms.

    ``order`` lists 1-based indices left to right.
    """
    terms = list(terms)
    _check_len(terms, cap, "AP")
    k = len(terms)
    for j in range(1, k + 1):
        for order in permutations(range(k), j):
            yield tuple(n + 1 for n in order), _product(terms[n] for n in order)


def ap(terms: Seq[Element], cap: int = AP_CAP) -> frozenset:
    return frozenset(v for _, v in ap_expressions(terms, cap))


def ps(terms: Seq[Element]) -> frozenset:
    terms = list(terms)
    if len(terms) < 2:
        raise TooFewTerms("PS needs at least two terms")
    return frozenset(a + b for a, b in combinations(terms, 2))


def pp(terms: Seq[Element]) -> frozenset:
    terms = list(terms)
    if len(terms) < 2:
        raise TooFewTerms("PP needs at least two terms")
    return frozenset(v for a, b in combinations(terms, 2) for v in (a * b, b * a))


CONFIGS: dict[str, Callable[[Seq[Element]], frozenset]] = {
    "FS": fs,
    "FP": fp,
    "AP": ap,
    "PS": ps,
    "PP": pp,
}


def config_record(kind: str, terms: Seq[Element]) -> dict:
    """JSON-ready {"config", "terms", "values"} record with sorted values."""
    kind = kind.upper()
    try:
        gen = CONFIGS[kind]
    except KeyError:
        raise ValueError(f"unknown configuration {kind!r}") from None
    return {
        "config": kind,
        "terms": [str(t) for t in terms],
        "values": [str(v) for v in sorted_values(gen(terms))],
    }


def apply_blocks(x: Sequence | Iterable[Element], blocks: Seq[IndexSet]) -> BlockSystem:
    x = as_sequence(x)
    blocks = tuple(blocks)
    check_increasing(blocks)
    return BlockSystem(blocks, tuple(x.block_sum(h) for h in blocks))


def union_blocks(h_seq: Seq[IndexSet], k_seq: Seq[IndexSet]) -> list[IndexSet]:
    """G_n = union of H_t over t in K_n."""
    check_increasing(h_seq)
    check_increasing(k_seq)
    for k in k_seq:
        if k.max > len(h_seq):
            raise SourceTooShort(f"{k} selects beyond the {len(h_seq)} available blocks")
    return [IndexSet(tuple(n for t in k for n in h_seq[t - 1])) for k in k_seq]


def interleave_gaussian(x: Sequence | Iterable[Element]) -> Sequence:
    """z_{2p-1} = x_p and z_{2p} = i*x_p."""
    x = as_sequence(x)

    def rule(m: int) -> GaussianInt:
        v = GaussianInt.coerce(x[(m + 1) // 2])
        return v if m % 2 else I * v

    return Sequence.from_rule(rule, 2 * x.bound, name="interleave_gaussian")


_QUNITS = (ONE, QI, QJ, QK)


def interleave_quaternion(x: Sequence | Iterable[Element]) -> Sequence:
    """w_{4p+1} = x_{p+1}, w_{4p+2} = i*x_{p+1}, w_{4p+3} = j*x_{p+1}, w_{4p} = k*x_p."""
    x = as_sequence(x)

    def rule(n: int) -> LipschitzQuat:
        return _QUNITS[(n - 1) % 4] * LipschitzQuat.coerce(x[(n + 3) // 4])

    return Sequence.from_rule(rule, 4 * x.bound, name="interleave_quaternion")
