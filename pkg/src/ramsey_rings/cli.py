"""Command-line front end.

Every subcommand prints one JSON document on stdout; diagnostics go to
stderr.  Exit status: 0 success, 1 nothing found or a violation, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import random
import shlex
import sys
from pathlib import Path
from typing import Callable

from . import builder, experiments, extraction
from .configs import CONFIGS, IndexSet, Sequence, apply_blocks, config_record, pp, ps
from .errors import RamseyRingsError, SearchExhausted, SourceTooShort
from .gaussian import GaussianInt, gi_coset_reps, gi_divrem
from .harness import (
    Coloring,
    family_coloring,
    gaussian_box_domain,
    hindman_witness,
    interval,
    pspp_check,
    schur_search,
)
from .large_sets import find_j_witness, parse_description
from .quaternion import LipschitzQuat, q_left_coset_reps, q_left_divrem, q_right_coset_reps, q_right_divrem
from .rings import Element, coerce, common_kind, kind_of, parse_element, sorted_values

RINGS = ("int", "gauss", "quat")
NAMED_SEQUENCES: dict[str, Callable[[int], int]] = {
    "ones": lambda n: 1,
    "zeros": lambda n: 0,
    "naturals": lambda n: n,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input helpers ----------------------------------------------------------


def _element(text: str, kind: str | None) -> Element:
    return parse_element(text.strip(), kind)


def _elements(text: str, kind: str | None) -> list[Element]:
    return [_element(t, kind) for t in text.split(",") if t.strip()]


def _random_rule(seed: int, kind: str, radius: int = 50) -> Callable[[int], Element]:
    dims = {"int": 1, "gauss": 2, "quat": 4}[kind]
    cache: dict[int, Element] = {}
    rng = random.Random(seed)

    def rule(n: int) -> Element:
        while len(cache) < n:
            c = [rng.randint(-radius, radius) for _ in range(dims)]
            cache[len(cache) + 1] = c[0] if kind == "int" else (GaussianInt(*c) if kind == "gauss" else LipschitzQuat(*c))
        return cache[n]

    return rule


def load_sequence(spec: str, kind: str | None, length: int) -> Sequence:
    """Named sequence, ``random:SEED``, a file (one element per line) or "a,b,c"."""
    if spec in NAMED_SEQUENCES:
        rule = NAMED_SEQUENCES[spec]
        if kind in (None, "int"):
            return Sequence.from_rule(rule, length, name=spec)
        return Sequence.from_rule(lambda n: coerce(rule(n), kind), length, name=spec)
    if spec.startswith("random:"):
        return Sequence.from_rule(_random_rule(int(spec[7:] or 0), kind or "int"), length, name=spec)
    path = Path(spec)
    if path.is_file():
        lines = [ln.strip() for ln in path.read_text().splitlines()]
        return Sequence.of([_element(ln, kind) for ln in lines if ln and not ln.startswith("#")], name=spec)
    return Sequence.of(_elements(spec, kind), name=spec)


def _blocks(text: str) -> list[IndexSet]:
    """"1,2;3;4,5" -> [{1,2}, {3}, {4,5}]."""
    try:
        return [IndexSet.of(int(i) for i in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad block list {text!r}: {exc}") from None


def _domain(text: str) -> list[Element]:
    if text.startswith("box:"):
        return gaussian_box_domain(int(text[4:]))
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"domain must be LO..HI or box:R, got {text!r}")
    return interval(int(lo), int(hi))


def _coloring(spec: str, domain: list[Element] | None) -> Coloring:
    path = Path(spec)
    if path.suffix == ".json" and path.is_file():
        return Coloring.from_json(path.read_text())
    if spec.lstrip().startswith("{"):
        return Coloring.from_json(spec)
    if domain is None:
        raise UsageError("a built-in coloring family needs --domain")
    return family_coloring(spec, domain)


# -- subcommands ------------------------------------------------------------


def cmd_divrem(args) -> tuple[int, dict]:
    x, z = _element(args.x, args.ring), _element(args.z, args.ring)
    kind = common_kind(x, z)
    if kind == "quat":
        q, r = (q_right_divrem if args.side == "right" else q_left_divrem)(coerce(x, kind), coerce(z, kind))
    else:
        q, r = gi_divrem(x, z)
    return 0, {"q": str(q), "r": str(r)}


def cmd_cosets(args) -> tuple[int, dict]:
    z = _element(args.z, args.ring)
    kind = kind_of(z)
    if kind == "int":
        if not z:
            raise ZeroDivisionError("modulus must be nonzero")
        reps: list = list(range(abs(z)))
    elif kind == "gauss":
        reps = gi_coset_reps(z)
    else:
        # left: classes x + L*z; right: classes x + z*L
        reps = (q_left_coset_reps if args.side == "left" else q_right_coset_reps)(z)
    return 0, {"z": str(z), "count": len(reps), "reps": [str(r) for r in reps]}


def cmd_extract(args) -> tuple[int, dict]:
    z = _element(args.z, args.ring)
    x = load_sequence(args.seq, args.ring, args.length)
    h = extraction.extract_divisible_block(x, z, args.m, args.strategy, side=args.side)
    return 0, extraction.certificate(x, z, h, args.strategy) | {"m": args.m}


def cmd_union_extract(args) -> tuple[int, dict]:
    z = _element(args.z, args.ring)
    seqs = [load_sequence(s, args.ring, args.length) for s in args.seq]
    if args.blocks:
        if len(seqs) != 1:
            raise UsageError("--blocks takes exactly one --seq")
        got = extraction.divisible_union_subsystem(
            seqs[0], _blocks(args.blocks), z, args.count, args.strategy, side=args.side
        )
    else:
        got = extraction.common_divisible_blocks(seqs, z, args.count, args.strategy, side=args.side)
    return 0, {
        "z": str(z),
        "blocks": [k.to_list() for k in got],
        "sums": [[str(f.block_sum(k)) for k in got] for f in seqs],
    }


def cmd_config(args) -> tuple[int, dict]:
    return 0, config_record(args.kind, _elements(args.terms, args.ring))


def _theorem(args) -> str:
    return args.theorem or ("ap" if args.ring == "quat" else "fp")


def cmd_build(args) -> tuple[int, dict]:
    a = parse_description(args.set)
    x = load_sequence(args.seq, args.ring, args.length)
    theorem = _theorem(args)
    bounds = builder.Bounds(args.blocks_per_level, args.backtracks, args.max_span, args.workers)
    system = builder.BUILDERS[theorem](x, a, args.depth, bounds)
    report = builder.VERIFIERS[theorem](system, a)
    return (0 if report.ok else 1), builder.certificate(system, a, report) | {"theorem": theorem}


def cmd_verify(args) -> tuple[int, dict]:
    a = parse_description(args.set)
    theorem = _theorem(args)
    if args.terms:
        system: object = _elements(args.terms, args.ring)
        terms = system
    else:
        if not (args.seq and args.blocks):
            raise UsageError("verify needs --terms, or --seq with --blocks")
        system = apply_blocks(load_sequence(args.seq, args.ring, args.length), _blocks(args.blocks))
        terms = system.terms
    report = builder.VERIFIERS[theorem](system, a)
    out = {"set": str(a), "theorem": theorem, "terms": [str(t) for t in terms]} | report.to_dict()
    return (0 if report.ok else 1), out


def cmd_j_witness(args) -> tuple[int, dict]:
    a = parse_description(args.set)
    seqs = [load_sequence(s, args.ring, args.length) for s in args.seq]
    c, h = find_j_witness(seqs, a, args.a_radius, args.h_range, args.ring)
    return 0, {
        "found": True,
        "c": str(c),
        "H": h.to_list(),
        "values": [str(c + f.block_sum(h)) for f in seqs],
    }


def cmd_schur(args) -> tuple[int, dict]:
    return 0, schur_search(args.n, args.colors).to_dict()


def cmd_hindman(args) -> tuple[int, dict]:
    domain = _domain(args.domain) if args.domain else None
    coloring = _coloring(args.coloring, domain)
    w = hindman_witness(coloring, args.k, args.max_nodes)
    return 0, {"found": True} | w.to_dict()


def cmd_pspp(args) -> tuple[int, dict]:
    terms = _elements(args.terms, args.ring)
    if args.domain:
        domain = _domain(args.domain)
    else:
        domain = sorted_values(ps(terms) | pp(terms))
    report = pspp_check(terms, _coloring(args.coloring, domain))
    return 0, report.to_dict()


def cmd_report(args) -> tuple[int, dict]:
    from . import plotting

    out = Path(args.out)
    delim = "\t" if args.delimiter in ("\\t", "tab") else args.delimiter
    if len(delim) != 1:
        raise UsageError("--delimiter must be a single character")
    ext = "tsv" if delim == "\t" else "csv"
    ext_rows = experiments.extraction_rows(args.trials, args.max_norm, args.seed)
    summary = experiments.summarize_extraction(ext_rows)
    sch_rows = experiments.schur_rows({2: 8, 3: args.schur3})
    bld_rows = experiments.builder_rows(max(1, args.trials // 2), args.depth, args.seed)
    files = [
        experiments.write_csv(ext_rows, out / f"extraction.{ext}", delim),
        experiments.write_csv(summary, out / f"extraction_summary.{ext}", delim),
        experiments.write_csv(sch_rows, out / f"schur.{ext}", delim),
        experiments.write_csv(bld_rows, out / f"builder.{ext}", delim),
        plotting.plot_extraction(summary, out / "extraction.png"),
        plotting.plot_schur(sch_rows, out / "schur.png"),
        plotting.plot_builder(bld_rows, out / "builder.png"),
    ]
    bad = [r for r in bld_rows if not r["ok"]]
    out_doc = {
        "files": [str(p) for p in files],
        "extraction_trials": len(ext_rows),
        "builder_failures": len(bad),
        "schur": {str(c): max((r["n"] for r in sch_rows if r["colors"] == c and not r["forced"]), default=0)
                  for c in sorted({r["colors"] for r in sch_rows})},
    }
    return (1 if bad else 0), out_doc


def cmd_batch(args) -> tuple[int, None]:
    """Run one command per line and print one JSON line per command."""
    fh = sys.stdin if args.file == "-" else open(args.file)
    worst = 0
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            argv = shlex.split(line)
            if argv and argv[0] in ("batch", "report"):
                code, payload = 2, {"error": f"{argv[0]} is not allowed inside a batch"}
            else:
                code, payload = execute(argv)
            worst = max(worst, code)
            print(json.dumps({"line": lineno, "argv": argv, "exit": code, "result": payload}), flush=True)
    return worst, None


# -- parser -----------------------------------------------------------------


def _ring_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ring", choices=RINGS, help="coerce inputs into this ring (default: inferred)")


def _seq_args(p: argparse.ArgumentParser, many: bool = False) -> None:
    p.add_argument(
        "--seq",
        required=True,
        action="append" if many else "store",
        help="ones | zeros | naturals | random:SEED | FILE | a,b,c",
    )
    p.add_argument("--length", type=int, default=10_000, help="bound for rule sequences")


def _side_arg(p: argparse.ArgumentParser, default: str, choices=("left", "right")) -> None:
    p.add_argument("--side", choices=choices, default=default)


def _bounds_args(p: argparse.ArgumentParser) -> None:
    d = builder.Bounds()
    p.add_argument("--blocks-per-level", type=int, default=d.blocks_per_level)
    p.add_argument("--backtracks", type=int, default=d.backtracks)
    p.add_argument("--max-span", type=int, default=d.max_span)
    p.add_argument("--workers", type=int, default=d.workers)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramsey-rings", description=__doc__.splitlines()[0])
    parser.add_argument("--jsonl", action="store_true", help="compact one-line JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("divrem", help="x = q*z + r")
    p.add_argument("--x", required=True)
    p.add_argument("--z", required=True)
    _ring_arg(p)
    _side_arg(p, "right")
    p.set_defaults(func=cmd_divrem)

    p = sub.add_parser("cosets", help="residue class representatives modulo z")
    p.add_argument("--z", required=True)
    _ring_arg(p)
    _side_arg(p, "left")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("extract", help="block H past m with z dividing its sum")
    _seq_args(p)
    p.add_argument("--z", required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--strategy", choices=extraction.STRATEGIES, default="A")
    _ring_arg(p)
    _side_arg(p, "left")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("union-extract", help="increasing blocks with divisible sums for every --seq")
    _seq_args(p, many=True)
    p.add_argument("--z", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--blocks", help="source blocks as 1,2;3;4,5 (one --seq only)")
    p.add_argument("--strategy", choices=extraction.STRATEGIES, default="A")
    _ring_arg(p)
    _side_arg(p, "left")
    p.set_defaults(func=cmd_union_extract)

    p = sub.add_parser("config", help="FS/FP/AP/PS/PP values of a finite sequence")
    p.add_argument("--kind", required=True, type=str.upper, choices=sorted(CONFIGS))
    p.add_argument("--terms", required=True)
    _ring_arg(p)
    p.set_defaults(func=cmd_config)

    theorems = sorted(builder.BUILDERS)
    p = sub.add_parser("build", help="sum subsystem whose sums and products stay in a set")
    p.add_argument("--set", required=True)
    _seq_args(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--theorem", choices=theorems, help="fp (default), leftprod or ap (default for quat)")
    _ring_arg(p)
    _bounds_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check sums and products of given terms against a set")
    p.add_argument("--set", required=True)
    p.add_argument("--terms")
    p.add_argument("--seq")
    p.add_argument("--blocks")
    p.add_argument("--length", type=int, default=10_000)
    p.add_argument("--theorem", choices=theorems)
    _ring_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("j-witness", help="search a shift c and block H with c + sums in a set")
    p.add_argument("--set", required=True)
    _seq_args(p, many=True)
    p.add_argument("--a-radius", type=int, default=2)
    p.add_argument("--h-range", type=int, default=8)
    _ring_arg(p)
    p.set_defaults(func=cmd_j_witness)

    p = sub.add_parser("schur", help="is a monochromatic x, y, x+y forced in {1..N}?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, default=2)
    p.set_defaults(func=cmd_schur)

    colorings = "constant | parity | residue:M | random:SEED[:C] | FILE.json | JSON"
    p = sub.add_parser("hindman", help="k terms with a monochromatic FS set")
    p.add_argument("--coloring", required=True, help=colorings)
    p.add_argument("--domain", help="LO..HI or box:R")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=10**6)
    p.set_defaults(func=cmd_hindman)

    p = sub.add_parser("pspp", help="is PS | PP of the terms monochromatic?")
    p.add_argument("--terms", required=True)
    p.add_argument("--coloring", required=True, help=colorings)
    p.add_argument("--domain", help="LO..HI or box:R (default: the PS | PP values)")
    _ring_arg(p)
    p.set_defaults(func=cmd_pspp)

    p = sub.add_parser("batch", help="run commands from a file, one per line, JSON Lines out")
    p.add_argument("file", help="command file, or - for stdin")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("report", help="run the experiment batch, write CSV tables and PNG figures")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-norm", type=int, default=25)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--schur3", type=int, default=14, help="largest N for the 3-color Schur sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delimiter", default=",")
    p.set_defaults(func=cmd_report)
    return parser


# -- entry points -----------------------------------------------------------


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def execute(argv: list[str]) -> tuple[int, dict | None]:
    """Parse and run one command; returns (exit code, JSON payload)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _diag(f"{exc}\n(try ramsey-rings --help)")
        return 2, {"error": str(exc)}
    except SystemExit as exc:  # --help
        return int(exc.code or 0), None
    try:
        return args.func(args)
    except SearchExhausted as exc:
        _diag(f"ramsey-rings: not found: {exc}")
        return 1, {"found": False, "error": str(exc)} | {k: v for k, v in exc.stats.items()}
    except SourceTooShort as exc:
        _diag(f"ramsey-rings: not found: {exc}")
        return 1, {"found": False, "error": str(exc)}
    except (UsageError, RamseyRingsError, ValueError, ZeroDivisionError, TypeError, OSError) as exc:
        _diag(f"ramsey-rings: error: {exc}")
        return 2, {"error": str(exc)}


def cli_main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, payload = execute(argv)
    if payload is not None:
        compact = "--jsonl" in argv
        print(json.dumps(payload) if compact else json.dumps(payload, indent=2))
    return code


def main() -> None:
    sys.exit(cli_main())
