"""Greedy, backtracking construction of sum subsystems inside a target set.

Each builder picks blocks H_1, H_2, ... left to right.  The block chosen at
level n+1 must have its sum in a *level set* computed from the terms chosen
so far, expressed in the set-description algebra:

* FS/FP (commutative):  A & shift(s)A for s in FS(prefix) & lpre(s)A for s in FP(prefix)
* FS/left products:     B_{n+1} = A & lpre(a)A for a in AP(prefix) & shift(a)B_m for a in E_m
* FS/AP:                as above, plus rpre(b)A and lpre(a)rpre(b)A

where E_m collects the sums of prefix terms whose smallest index is m.  The
construction uses plain membership in A; success is checked afterwards by
the verifiers below, which share no code with the search.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice, permutations
from typing import Callable, Iterator, Sequence as Seq

from .configs import AP_CAP, BlockSystem, IndexSet, Sequence, ap, as_sequence, fp, fs
from .errors import CapExceeded, SearchExhausted
from .large_sets import (
    Everything,
    Nothing,
    SetDescription,
    intersect_all,
    left_preimage,
    right_preimage,
    translate,
)
from .rings import Element

DEPTH_CAP = 8


def _lpre(a: SetDescription, p: Element) -> SetDescription:
    # 0^-1 A is everything or nothing, depending on whether 0 is in A
    if not p:
        return Everything() if a.contains(p) else Nothing()
    return left_preimage(a, p)


def _rpre(a: SetDescription, p: Element) -> SetDescription:
    if not p:
        return Everything() if a.contains(p) else Nothing()
    return right_preimage(a, p)


@dataclass(frozen=True)
class Bounds:
    """Search limits.

    ``blocks_per_level`` caps the general candidates tried at one level; after
    them come contiguous blocks only, which is where a pigeonhole block for an
    ideal target is guaranteed to live.  No block reaches past
    ``lo + max_span - 1``.
    """

    blocks_per_level: int = 500
    backtracks: int = 10_000
    max_span: int = 256
    workers: int = 1


def _subsets_by_max(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    for mx in range(lo, hi + 1):
        for size in range(1, mx - lo + 2):
            for rest in combinations(range(lo, mx), size - 1):
                yield rest + (mx,)


def candidate_blocks(lo: int, hi: int, limit: int) -> Iterator[IndexSet]:
    """Blocks inside [lo, hi] in (max, size, lexicographic) order.

    The first ``limit`` are arbitrary subsets; the remaining contiguous
    blocks follow in the same order.
    """
    contiguous_done: set[tuple[int, int]] = set()
    for block in islice(_subsets_by_max(lo, hi), limit):
        if block[-1] - block[0] + 1 == len(block):
            contiguous_done.add((block[0], block[-1]))
        yield IndexSet(block)
    for mx in range(lo, hi + 1):
        for start in range(mx, lo - 1, -1):
            if (start, mx) not in contiguous_done:
                yield IndexSet.interval(start, mx)


@dataclass
class _Search:
    x: Sequence
    depth: int
    bounds: Bounds
    level_set: Callable[[tuple[Element, ...]], SetDescription]
    backtracks: int = 0
    deepest: int = 0
    _prefix: list = field(default_factory=lambda: [None])

    def block_sum(self, h: IndexSet) -> Element:
        if h.max - h.min + 1 == len(h):
            # contiguous: difference of cached prefix sums
            p = self._prefix
            while len(p) <= h.max:
                n = len(p)
                p.append(self.x[n] if p[-1] is None else p[-1] + self.x[n])
            lo = p[h.min - 1]
            return p[h.max] if lo is None else p[h.max] - lo
        return self.x.block_sum(h)

    def candidates(self, blocks: list[IndexSet]) -> Iterator[IndexSet]:
        lo = blocks[-1].max + 1 if blocks else 1
        hi = min(self.x.bound, lo + self.bounds.max_span - 1)
        return candidate_blocks(lo, hi, self.bounds.blocks_per_level)

    def extend(self, blocks: list[IndexSet], terms: tuple) -> list[IndexSet] | None:
        self.deepest = max(self.deepest, len(blocks))
        if len(blocks) == self.depth:
            return blocks
        target = self.level_set(terms)
        for h in self.candidates(blocks):
            y = self.block_sum(h)
            if not target.contains(y):
                continue
            found = self.extend(blocks + [h], terms + (y,))
            if found is not None:
                return found
            self.backtracks += 1
            if self.backtracks > self.bounds.backtracks:
                raise SearchExhausted(
                    "backtrack budget exhausted",
                    deepest=self.deepest,
                    backtracks=self.backtracks,
                )
        return None


def _run(x, depth: int, bounds: Bounds, level_set, cap: int) -> BlockSystem:
    x = as_sequence(x)
    if depth < 1:
        raise ValueError("depth must be positive")
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds the cap of {cap}")
    search = _Search(x, depth, bounds, level_set)
    if bounds.workers > 1:
        blocks = _run_parallel(search)
    else:
        blocks = search.extend([], ())
    if blocks is None:
        raise SearchExhausted(
            "candidate blocks exhausted",
            deepest=search.deepest,
            backtracks=search.backtracks,
        )
    return BlockSystem(tuple(blocks), tuple(x.block_sum(h) for h in blocks))


def _run_parallel(search: _Search) -> list[IndexSet] | None:
    """Split the first level across threads; the earliest candidate wins."""
    first = search.level_set(())
    tops = []
    for h in search.candidates([]):
        y = search.block_sum(h)
        if first.contains(y):
            tops.append((h, y))
        if len(tops) >= search.bounds.blocks_per_level:
            break

    def subtree(item):
        h, y = item
        sub = _Search(search.x, search.depth, search.bounds, search.level_set)
        try:
            return sub.extend([h], (y,)), sub.deepest
        except SearchExhausted as exc:
            return None, exc.stats.get("deepest", 1)

    with ThreadPoolExecutor(max_workers=search.bounds.workers) as pool:
        results = list(pool.map(subtree, tops))
    for blocks, deepest in results:
        search.deepest = max(search.deepest, deepest)
        if blocks is not None:
            return blocks
    return None


def build_fs_fp(
    x: Sequence | Seq[Element],
    a: SetDescription,
    depth: int,
    bounds: Bounds = Bounds(),
) -> BlockSystem:
    """Sum subsystem y_1..y_depth of x with FS(y) and FP(y) inside A."""

    def level_set(terms):
        if not terms:
            return a
        return intersect_all(
            [a]
            + [translate(a, s) for s in fs(terms)]
            + [_lpre(a, s) for s in fp(terms)]
        )

    return _run(x, depth, bounds, level_set, DEPTH_CAP)


class _LevelSets:
    """The nested level sets B_1, B_2, ... of the quaternion constructions."""

    def __init__(self, a: SetDescription, two_sided: bool) -> None:
        self.a = a
        self.two_sided = two_sided
        self.cache: dict[tuple, SetDescription] = {(): a}

    def __call__(self, terms: tuple) -> SetDescription:
        if terms in self.cache:
            return self.cache[terms]
        n = len(terms)
        prods = ap(terms)
        parts = [self.a] + [_lpre(self.a, p) for p in prods]
        if self.two_sided:
            parts += [_rpre(self.a, p) for p in prods]
            parts += [_lpre(_rpre(self.a, q), p) for p in prods for q in prods]
        for m in range(1, n + 1):
            b_m = self(terms[: m - 1])
            for s in _sums_starting_at(terms, m):
                parts.append(translate(b_m, s))
        out = intersect_all(parts)
        self.cache[terms] = out
        return out


def _sums_starting_at(terms: tuple, m: int) -> set:
    """E_m: sums over nonempty F within 1..len(terms) with min F = m."""
    head = terms[m - 1]
    rest = terms[m:]
    return {head} | {head + s for s in fs(rest)} if rest else {head}


def build_fs_leftprod(
    y: Sequence | Seq[Element],
    a: SetDescription,
    depth: int,
    bounds: Bounds = Bounds(),
) -> BlockSystem:
    """Sum subsystem x with FS(x) in A and b*sum_{t in F} x_t in A whenever
    min F >= m >= 2 and b is an ordered product of distinct x_1..x_{m-1}."""
    return _run(y, depth, bounds, _LevelSets(a, two_sided=False), AP_CAP)


def build_fs_ap(
    y: Sequence | Seq[Element],
    a: SetDescription,
    depth: int,
    bounds: Bounds = Bounds(),
) -> BlockSystem:
    """Sum subsystem x with FS(x) and AP(x) inside A."""
    return _run(y, depth, bounds, _LevelSets(a, two_sided=True), AP_CAP)


# -- verification -----------------------------------------------------------


@dataclass
class Report:
    sums: int = 0
    products: int = 0
    product_kind: str = "fp"
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"fs": self.sums, self.product_kind: self.products, "violations": self.violations}


def _subsets(k: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, k + 1):
        yield from combinations(range(k), size)


def _check(report: Report, a: SetDescription, kind: str, indices, value, left=None) -> None:
    if not a.contains(value):
        v = {"kind": kind, "indices": [i + 1 for i in indices], "value": str(value)}
        if left is not None:
            v["left"] = [i + 1 for i in left]
        report.violations.append(v)


def _sum(terms, idx):
    out = terms[idx[0]]
    for i in idx[1:]:
        out = out + terms[i]
    return out


def _prod(terms, idx):
    out = terms[idx[0]]
    for i in idx[1:]:
        out = out * terms[i]
    return out


def _verify_sums(terms, a: SetDescription, report: Report) -> None:
    for idx in _subsets(len(terms)):
        report.sums += 1
        _check(report, a, "sum", idx, _sum(terms, idx))


def verify_fs_fp(system: BlockSystem | Seq[Element], a: SetDescription) -> Report:
    """Check every one of the 2^k - 1 sums and 2^k - 1 products for membership."""
    terms = list(system.terms if isinstance(system, BlockSystem) else system)
    report = Report(product_kind="fp")
    _verify_sums(terms, a, report)
    for idx in _subsets(len(terms)):
        report.products += 1
        _check(report, a, "product", idx, _prod(terms, idx))
    return report


def verify_fs_ap(system: BlockSystem | Seq[Element], a: SetDescription) -> Report:
    """Check all subset sums and every ordered product of distinct terms."""
    terms = list(system.terms if isinstance(system, BlockSystem) else system)
    report = Report(product_kind="ap")
    _verify_sums(terms, a, report)
    k = len(terms)
    for j in range(1, k + 1):
        for order in permutations(range(k), j):
            report.products += 1
            _check(report, a, "product", order, _prod(terms, order))
    return report


def verify_fs_leftprod(system: BlockSystem | Seq[Element], a: SetDescription) -> Report:
    """Check all subset sums and b * sum_{t in F} x_t with min F >= m >= 2,
    b an ordered product of distinct terms among x_1..x_{m-1}."""
    terms = list(system.terms if isinstance(system, BlockSystem) else system)
    report = Report(product_kind="leftprod")
    _verify_sums(terms, a, report)
    k = len(terms)
    for m in range(2, k + 1):
        tail = range(m - 1, k)
        for size in range(1, k - m + 2):
            for f in combinations(tail, size):
                s = _sum(terms, f)
                for j in range(1, m):
                    for order in permutations(range(m - 1), j):
                        report.products += 1
                        _check(report, a, "left-product", f, _prod(terms, order) * s, left=order)
    return report


VERIFIERS = {"fp": verify_fs_fp, "leftprod": verify_fs_leftprod, "ap": verify_fs_ap}
BUILDERS = {"fp": build_fs_fp, "leftprod": build_fs_leftprod, "ap": build_fs_ap}


def certificate(system: BlockSystem, a: SetDescription, report: Report) -> dict:
    return {
        "blocks": [h.to_list() for h in system.blocks],
        "terms": [str(t) for t in system.terms],
        "set": str(a),
        "verified": report.to_dict(),
    }
