"""Command line front end and the plain-text instance format.

An instance file is ASCII, newline-terminated lines, single spaces::

    woodall-packer v1
    n <nodes>
    m <arcs>
    arc <tail> <head>          (m lines, sorted)
    step <v> <a> <b> <c>       (optional growth steps, in order)
    transversal <idx> <tail> <head>   (optional packing, 0-based classes)

Writing is canonical (arcs sorted, classes in index order), so write,
read, write round-trips byte for byte.

Exit codes: 0 success, 2 I/O or malformed file or generation gave up,
3 acyclic input, 4 construction failure (instance dumped), 5 verification
failure, 6 search budget exhausted, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .digraph import Arc, Digraph, make_digraph
from .dicycles import girth
from .errors import (
    AcyclicInput,
    BudgetExhausted,
    ConstructionFailed,
    NotThreeTree,
    PackerError,
    ResampleExhausted,
)
from .generator import GenConfig, generate
from .oracle import check_split, exact_nu, verify_packing, VerificationReport
from .packing import Packing, pack
from .three_tree import ConstructionSequence, Step

HEADER = "woodall-packer v1"

EXIT_OK = 0
EXIT_IO = 2
EXIT_ACYCLIC = 3
EXIT_CONSTRUCTION = 4
EXIT_VERIFY = 5
EXIT_BUDGET = 6
EXIT_USAGE = 64


class FormatError(ValueError):
    """The file is not a well-formed instance."""


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class InstanceFile:
    """Parsed contents of an instance file."""

    n: int
    arcs: tuple[Arc, ...]
    steps: tuple[Step, ...] | None = None
    packing: tuple[tuple[Arc, ...], ...] | None = None

    def digraph(self) -> Digraph:
        return make_digraph(self.n, self.arcs)

    def construction(self) -> ConstructionSequence | None:
        if self.steps is None:
            return None
        grown = {s.vertex for s in self.steps}
        base = frozenset(range(self.n)) - grown
        return ConstructionSequence(base, self.steps)

    def packing_value(self) -> Packing | None:
        if self.packing is None:
            return None
        return Packing(tuple(frozenset(t) for t in self.packing))


def instance_from(
    g: Digraph,
    seq: ConstructionSequence | None = None,
    packing: Packing | None = None,
) -> InstanceFile:
    steps = seq.steps if seq is not None else None
    classes = (
        tuple(tuple(sorted(t)) for t in packing.transversals)
        if packing is not None
        else None
    )
    return InstanceFile(g.n, g.sorted_arcs, steps, classes)


def format_instance(inst: InstanceFile) -> str:
    lines = [HEADER, f"n {inst.n}", f"m {len(inst.arcs)}"]
    for a in sorted(inst.arcs):
        lines.append(f"arc {a.tail} {a.head}")
    if inst.steps is not None:
        for vertex, host in inst.steps:
            a, b, c = sorted(host)
            lines.append(f"step {vertex} {a} {b} {c}")
    if inst.packing is not None:
        for idx, t in enumerate(inst.packing):
            for arc in sorted(t):
                lines.append(f"transversal {idx} {arc.tail} {arc.head}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> InstanceFile:
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise FormatError(f"missing header {HEADER!r}")

    def ints(parts: list[str], want: int, what: str) -> list[int]:
        if len(parts) != want:
            raise FormatError(f"{what}: expected {want} fields, got {len(parts)}")
        try:
            return [int(p) for p in parts]
        except ValueError as exc:
            raise FormatError(f"{what}: non-integer field") from exc

    pos = 1

    def take(key: str) -> int:
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(key + " "):
            raise FormatError(f"expected '{key}' line")
        (value,) = ints(lines[pos].split()[1:], 1, key)
        pos += 1
        return value

    n = take("n")
    m = take("m")
    arcs: list[Arc] = []
    steps: list[Step] = []
    packing: dict[int, list[Arc]] = {}
    section = "arc"
    for line in lines[pos:]:
        if not line:
            raise FormatError("blank line inside instance")
        key, *rest = line.split(" ")
        if key == "arc" and section == "arc":
            tail, head = ints(rest, 2, "arc")
            arcs.append(Arc(tail, head))
        elif key == "step" and section in ("arc", "step"):
            section = "step"
            v, a, b, c = ints(rest, 4, "step")
            host = frozenset((a, b, c))
            if len(host) != 3:
                raise FormatError(f"step {v}: host vertices not distinct")
            steps.append(Step(v, host))
        elif key == "transversal":
            section = "transversal"
            idx, tail, head = ints(rest, 3, "transversal")
            packing.setdefault(idx, []).append(Arc(tail, head))
        else:
            raise FormatError(f"unexpected line {line!r}")
    if len(arcs) != m:
        raise FormatError(f"m says {m} arcs, found {len(arcs)}")
    try:
        make_digraph(n, arcs)
    except PackerError as exc:
        raise FormatError(str(exc)) from exc
    if steps:
        grown = {s.vertex for s in steps}
        if len(grown) != len(steps) or len(set(range(n)) - grown) != 3:
            raise FormatError("steps must grow all but three vertices, once each")
    classes: tuple[tuple[Arc, ...], ...] | None = None
    if packing:
        if sorted(packing) != list(range(len(packing))):
            raise FormatError("transversal indices must be 0..k-1")
        classes = tuple(tuple(packing[i]) for i in range(len(packing)))
    return InstanceFile(
        n, tuple(arcs), tuple(steps) if steps else None, classes
    )


def read_instance(path: str | Path) -> InstanceFile:
    return parse_instance(Path(path).read_text(encoding="ascii"))


def write_instance(path: str | Path, inst: InstanceFile) -> None:
    Path(path).write_text(format_instance(inst), encoding="ascii", newline="\n")


def report_json(report: VerificationReport) -> str:
    return json.dumps({
        "disjoint": report.disjoint,
        "size": report.size,
        "girth": "inf" if math.isinf(report.girth) else int(report.girth),
        "transversals": [
            {
                "index": c.index,
                "ok": c.ok,
                "counterexample": list(c.counterexample.nodes) if c.counterexample else None,
            }
            for c in report.per_transversal
        ],
        "verdict": report.verdict,
    })


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise _UsageError("--n must be at least 3")
    cfg = GenConfig(
        n=args.n,
        seed=args.seed,
        digon_probability=args.digons,
        require_dicycle=args.require_dicycle,
    )
    seq, g = generate(cfg)
    write_instance(args.out, instance_from(g, seq))
    return EXIT_OK


def cmd_pack(args: argparse.Namespace) -> int:
    inst = read_instance(args.input)
    g = inst.digraph()
    try:
        p = pack(g, deep_verify=args.deep_verify)
    except ConstructionFailed as exc:
        dump = Path(args.out).with_suffix(".failed") if args.out else Path(str(args.input) + ".failed")
        write_instance(dump, instance_from(exc.digraph))
        print(f"construction failed: {exc}; instance dumped to {dump}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    out = args.out or args.input
    write_instance(out, instance_from(g, inst.construction(), p))
    print(f"packed {len(p)} transversals into {out}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    inst = read_instance(args.input)
    p = inst.packing_value()
    if p is None:
        raise _UsageError("instance has no packing section to verify")
    report = verify_packing(inst.digraph(), p)
    print(report_json(report))
    return EXIT_OK if report.verdict else EXIT_VERIFY


def cmd_nu(args: argparse.Namespace) -> int:
    inst = read_instance(args.input)
    try:
        value = exact_nu(inst.digraph(), budget=args.budget)
    except BudgetExhausted as exc:
        print(exc.lower_bound)
        print(
            f"warning: budget {exc.budget} exhausted, this is only a lower bound",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    print(value)
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise _UsageError("--count must be nonnegative")
    if not 3 <= args.min_n <= args.max_n:
        raise _UsageError("need 3 <= --min-n <= --max-n")
    master = random.Random(f"{args.seed}:fuzz")
    out_dir = Path(args.out or ".")
    girth_counts: dict[int, int] = {}
    started = time.perf_counter()

    def dump(index: int, g: Digraph, p: Packing | None) -> Path:
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"fuzz-failure-{index}.txt"
        write_instance(path, instance_from(g, packing=p))
        return path

    for i in range(args.count):
        n = master.randint(args.min_n, args.max_n)
        for attempt in range(5):
            cfg = GenConfig(
                n=n,
                seed=master.randrange(2**63),
                digon_probability=args.digons,
                require_dicycle=True,
            )
            try:
                _, g = generate(cfg)
                break
            except ResampleExhausted:
                continue
        else:
            print(f"instance {i}: generation kept failing", file=sys.stderr)
            return EXIT_IO
        try:
            p = pack(g)
        except ConstructionFailed as exc:
            path = dump(i, exc.digraph, None)
            print(f"instance {i}: construction failed, dumped to {path}", file=sys.stderr)
            return EXIT_CONSTRUCTION
        report = verify_packing(g, p)
        split_ok = True
        if len(p) == 3:
            split_ok, _ = check_split(g, p)
        if not (report.verdict and split_ok):
            path = dump(i, g, p)
            print(f"instance {i}: verification failed, dumped to {path}", file=sys.stderr)
            return EXIT_VERIFY
        girth_counts[report.size] = girth_counts.get(report.size, 0) + 1

    elapsed = time.perf_counter() - started
    print(f"fuzzed {args.count} instances in {elapsed:.2f}s")
    for size in sorted(girth_counts):
        print(f"girth {size}: {girth_counts[size]} instances")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="woodall-packer", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--digons", type=float, default=0.0)
    gen.add_argument("--require-dicycle", action="store_true")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    pack_cmd = sub.add_parser("pack", help="pack an instance file")
    pack_cmd.add_argument("--in", dest="input", required=True)
    pack_cmd.add_argument("--out", default=None)
    pack_cmd.add_argument("--deep-verify", action="store_true")
    pack_cmd.set_defaults(func=cmd_pack)

    verify = sub.add_parser("verify", help="verify a packed instance file")
    verify.add_argument("--in", dest="input", required=True)
    verify.set_defaults(func=cmd_verify)

    nu = sub.add_parser("nu", help="exact packing number of an instance")
    nu.add_argument("--in", dest="input", required=True)
    nu.add_argument("--budget", type=int, default=None)
    nu.set_defaults(func=cmd_nu)

    fuzz = sub.add_parser("fuzz", help="generate, pack, and verify in a loop")
    fuzz.add_argument("--count", type=int, required=True)
    fuzz.add_argument("--min-n", type=int, default=3)
    fuzz.add_argument("--max-n", type=int, default=24)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--digons", type=float, default=0.0)
    fuzz.add_argument("--out", default=None)
    fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotThreeTree as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AcyclicInput as exc:
        print(f"acyclic input: {exc}", file=sys.stderr)
        return EXIT_ACYCLIC
    except (FormatError, ResampleExhausted, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
