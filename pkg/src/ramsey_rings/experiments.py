"""Batch experiments behind ``ramsey-rings report``; each returns flat rows."""

from __future__ import annotations

import csv
import random
from pathlib import Path
from statistics import mean
from typing import Iterable

from .builder import Bounds, build_fs_fp, verify_fs_fp
from .configs import Sequence
from .errors import SearchExhausted
from .extraction import extract_divisible_block
from .gaussian import GaussianInt
from .harness import schur_search
from .large_sets import Ideal
from .quaternion import LipschitzQuat


def random_gaussian_sequence(rng: random.Random, length: int, radius: int = 50) -> Sequence:
    return Sequence.of(
        [GaussianInt(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(length)]
    )


def random_quaternion_sequence(rng: random.Random, length: int, radius: int = 50) -> Sequence:
    return Sequence.of(
        [LipschitzQuat(*(rng.randint(-radius, radius) for _ in range(4))) for _ in range(length)]
    )


def gaussian_moduli(max_norm: int) -> list[GaussianInt]:
    """One modulus per norm value up to max_norm (first in lexicographic order)."""
    seen: dict[int, GaussianInt] = {}
    r = int(max_norm**0.5) + 1
    for a in range(0, r + 1):
        for b in range(0, r + 1):
            z = GaussianInt(a, b)
            if 0 < z.norm() <= max_norm and z.norm() not in seen:
                seen[z.norm()] = z
    return [seen[n] for n in sorted(seen)]


def extraction_rows(trials: int = 50, max_norm: int = 25, seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for z in gaussian_moduli(max_norm):
        need = z.norm() * (z.norm() - 1) + 1
        for t in range(trials):
            x = random_gaussian_sequence(rng, need + 20)
            m = rng.randint(0, 20)
            for strategy in ("A", "B"):
                h = extract_divisible_block(x, z, m, strategy)
                rows.append(
                    {"z": str(z), "norm": z.norm(), "trial": t, "m": m,
                     "strategy": strategy, "size": len(h), "span": h.max - m}
                )
    return rows


def schur_rows(max_n: dict[int, int] | None = None) -> list[dict]:
    max_n = max_n or {2: 8, 3: 15}
    rows = []
    for colors, top in sorted(max_n.items()):
        for n in range(1, top + 1):
            rep = schur_search(n, colors)
            rows.append({"colors": colors, "n": n, "forced": int(rep.forced), "nodes": rep.nodes})
    return rows


def builder_rows(trials: int = 20, max_depth: int = 5, seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for z in (GaussianInt(1, 1), GaussianInt(2), GaussianInt(3), GaussianInt(2, 1)):
        target = Ideal(z)
        for t in range(trials):
            x = random_gaussian_sequence(rng, 400)
            for depth in range(1, max_depth + 1):
                try:
                    sys_ = build_fs_fp(x, target, depth, Bounds())
                except SearchExhausted:
                    rows.append({"set": str(target), "trial": t, "depth": depth,
                                 "ok": 0, "last_index": "", "violations": ""})
                    continue
                rep = verify_fs_fp(sys_, target)
                rows.append({"set": str(target), "trial": t, "depth": depth, "ok": int(rep.ok),
                             "last_index": sys_.blocks[-1].max, "violations": len(rep.violations)})
    return rows


def write_csv(rows: Iterable[dict], path: Path, delimiter: str = ",") -> Path:
    rows = list(rows)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]), delimiter=delimiter, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return path


def summarize_extraction(rows: list[dict]) -> list[dict]:
    out = []
    for norm_ in sorted({r["norm"] for r in rows}):
        for strategy in ("A", "B"):
            sizes = [r["size"] for r in rows if r["norm"] == norm_ and r["strategy"] == strategy]
            out.append({"norm": norm_, "strategy": strategy,
                        "mean_size": mean(sizes), "max_size": max(sizes)})
    return out
