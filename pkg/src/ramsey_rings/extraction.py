"""Pigeonhole extraction of index sets whose sums are divisible by a modulus.

Two interchangeable strategies:

``"A"``  prefix sums S_0 = 0, S_1, ... of x_{m+1}, x_{m+2}, ...; the first
       repeated residue S_i = S_j (mod z) gives the contiguous block
       {m+i+1, ..., m+j}.  At most ``class_count(z)`` terms are read.
``"B"``  bucket the terms by residue until one residue r has been seen
       ``norm(z)`` times; those indices sum to norm(z)*r = z*conj(z)*r = 0.

Quaternion moduli target the right ideal z*L by default (``side="left"``,
z divides on the left); for rational-integer z that is the two-sided ideal.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from itertools import islice
from typing import Iterable, Iterator, Sequence as Seq

from .configs import IndexSet, Sequence, as_sequence, check_increasing
from .errors import InsufficientBlocks, SourceTooShort
from .rings import Element, class_count, kind_of, norm, residue

STRATEGIES = ("A", "B")


def multiplicity(z: Element) -> int:
    """How many equal residues strategy B collects: |z| in Z, norm(z) otherwise."""
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    return abs(z) if kind_of(z) == "int" else norm(z)


def extract_divisible_block(
    x: Sequence | Iterable[Element],
    z: Element,
    m: int = 0,
    strategy: str = "A",
    *,
    side: str = "left",
    zero_shortcut: bool = False,
) -> IndexSet:
    """Return H with min H > m and z | sum_{n in H} x_n.

    ``zero_shortcut`` lets strategy B return a singleton as soon as a term is
    itself divisible; it is off by default so that B always returns exactly
    ``multiplicity(z)`` equal-residue indices.
    """
    x = as_sequence(x)
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if strategy == "A":
        return _prefix_pigeonhole(x, z, m, side)
    if strategy == "B":
        return _equal_residues(x, z, m, side, zero_shortcut)
    raise ValueError(f"unknown strategy {strategy!r}")


def _read(x: Sequence, n: int, z: Element, need: int) -> Element:
    # only a read past x's own bound is rephrased; a shortage deeper down
    # (InsufficientBlocks from a chained stream) passes through unchanged
    if n <= x.bound:
        return x[n]
    raise SourceTooShort(
        f"sequence bound {x.bound} reached at index {n}; "
        f"pigeonhole modulo {z} may need up to {need} terms"
    )


def _prefix_pigeonhole(x: Sequence, z: Element, m: int, side: str) -> IndexSet:
    need = class_count(z)
    seen = {residue(0, z, side): 0}
    total = None
    j = 0
    while True:
        j += 1
        term = _read(x, m + j, z, need)
        total = term if total is None else total + term
        r = residue(total, z, side)
        if r in seen:
            return IndexSet.interval(m + seen[r] + 1, m + j)
        seen[r] = j


def _equal_residues(x: Sequence, z: Element, m: int, side: str, zero_shortcut: bool) -> IndexSet:
    k = multiplicity(z)
    need = (k - 1) * class_count(z) + 1
    buckets: dict[Element, list[int]] = defaultdict(list)
    n = m
    while True:
        n += 1
        r = residue(_read(x, n, z, need), z, side)
        if zero_shortcut and not r:
            return IndexSet((n,))
        bucket = buckets[r]
        bucket.append(n)
        if len(bucket) == k:
            return IndexSet(tuple(bucket))


def certificate(x: Sequence | Iterable[Element], z: Element, h: IndexSet, strategy: str) -> dict:
    """JSON-ready {"z", "H", "sum", "strategy"} record."""
    x = as_sequence(x)
    return {"z": str(z), "H": h.to_list(), "sum": str(x.block_sum(h)), "strategy": strategy}


def _union_stream(
    f: Sequence,
    blocks: Iterator[IndexSet],
    z: Element,
    strategy: str,
    side: str,
) -> Iterator[IndexSet]:
    """Lazily yield G_1, G_2, ...: unions of consecutive blocks with divisible f-sums."""
    cache: list[IndexSet] = []

    def block(n: int) -> IndexSet:
        while len(cache) < n:
            try:
                cache.append(next(blocks))
            except StopIteration:
                raise InsufficientBlocks(
                    f"ran out of blocks after {len(cache)} while pigeonholing modulo {z}"
                ) from None
        return cache[n - 1]

    sums = Sequence.from_rule(lambda n: f.block_sum(block(n)), sys.maxsize)
    m = 0
    while True:
        k = extract_divisible_block(sums, z, m, strategy, side=side)
        yield IndexSet(tuple(i for t in k for i in block(t)))
        m = k.max


def divisible_union_subsystem(
    f: Sequence | Iterable[Element],
    h_seq: Seq[IndexSet],
    z: Element,
    count: int,
    strategy: str = "A",
    *,
    side: str = "left",
) -> list[IndexSet]:
    """G_1..G_count, each a union of consecutive H blocks, with z | sum over G_n."""
    f = as_sequence(f)
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    if count < 1:
        raise ValueError("count must be positive")
    check_increasing(h_seq)
    stream = _union_stream(f, iter(h_seq), z, strategy, side)
    return list(islice(stream, count))


def common_divisible_blocks(
    family: Seq[Sequence | Iterable[Element]],
    z: Element,
    count: int,
    strategy: str = "A",
    *,
    side: str = "left",
) -> list[IndexSet]:
    """K_1..K_count with max K_n < min K_{n+1} and z | sum_{t in K_n} f(t) for all f.

    Refines the singleton blocks once per function; the refinements are
    chained lazily so each level only materializes the blocks it consumes.
    """
    fam = [as_sequence(f) for f in family]
    if not fam:
        raise ValueError("the family of sequences is empty")
    if not z:
        raise ZeroDivisionError("modulus must be nonzero")
    if count < 1:
        raise ValueError("count must be positive")
    bound = min(f.bound for f in fam)
    stream: Iterator[IndexSet] = (IndexSet((n,)) for n in range(1, bound + 1))
    for f in fam:
        stream = _union_stream(f, stream, z, strategy, side)
    return list(islice(stream, count))
