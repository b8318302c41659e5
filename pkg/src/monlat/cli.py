"""Command-line surface.

Subcommands: validate, nsub, check, enumerate, paper-examples. Exit codes:
0 all pass, 1 property failures found, 2 input errors. Reports are
deterministic: identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .census import lattices_up_to
from .checks import run_check
from .context import cmon_context
from .formats import (
    ParseError,
    emit_lattice_text,
    emit_monoid_text,
    emit_semilattice_text,
    parse_structure,
)
from .monoid import FinMonoid, InvalidMonoid, MonoidError
from .nsub import enumerate_nsub, is_distributive, is_modular, lattice_of_semilattice
from .scenarios import run_reference_scenarios
from .semilattice import fixture

PROPERTIES = ("hsd", "secondiso", "dpn", "diexact", "modular", "distributive", "stability")


def _load(source: str) -> tuple[FinMonoid, str]:
    """A fixture name or a path to a monoid/semilattice file."""
    try:
        return fixture(source), source
    except KeyError:
        pass
    path = Path(source)
    if not path.exists():
        raise ParseError(0, f"no such fixture or file: {source}")
    M = parse_structure(path.read_text())
    return M, path.stem


def cmd_validate(args) -> int:
    try:
        M, _ = _load(args.input)
    except (ParseError, InvalidMonoid, MonoidError) as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return 2
    if M.is_semilattice:
        sys.stdout.write(emit_semilattice_text(M))
    else:
        sys.stdout.write(emit_monoid_text(M))
    return 0


def cmd_nsub(args) -> int:
    try:
        M, _ = _load(args.input)
    except (ParseError, InvalidMonoid, MonoidError) as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return 2
    lat = enumerate_nsub(cmon_context(), M)
    sys.stdout.write(emit_lattice_text(lat))
    return 0


def cmd_check(args) -> int:
    try:
        M, name = _load(args.input)
    except (ParseError, InvalidMonoid, MonoidError) as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return 2
    if args.property == "stability" and args.ses_depth != 0:
        print("stability is a base-context check; use --ses-depth 0", file=sys.stderr)
        return 2
    if args.ses_depth == 0 or args.property == "stability":
        reports = run_check(args.property, M, 0, name)
    elif args.jobs > 1:
        from .checks import CHECKS, objects_at_depth

        triples = objects_at_depth(M, args.ses_depth, name)
        fn = CHECKS[args.property]
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(
                pool.map(lambda t: fn(t[0], t[1], t[2], args.ses_depth), triples)
            )
    else:
        reports = run_check(args.property, M, args.ses_depth, name)
    for report in reports:
        sys.stdout.write(report.result_line() + "\n")
    failures = sum(0 if r.passed else 1 for r in reports)
    if args.format == "text":
        sys.stdout.write(f"# {len(reports) - failures} pass, {failures} fail\n")
    return 1 if failures else 0


def cmd_enumerate(args) -> int:
    if args.max_size < 1 or args.max_size > 8:
        print("supported sizes are 1..8", file=sys.stderr)
        return 2
    emitted = 0
    counts: dict[int, int] = {}
    for L in lattices_up_to(args.max_size):
        lat = lattice_of_semilattice(L)
        modular, _ = is_modular(lat)
        distributive, _ = is_distributive(lat)
        if args.filter == "nonmodular" and modular:
            continue
        if args.filter == "nondistributive" and distributive:
            continue
        counts[L.size] = counts.get(L.size, 0) + 1
        covers = ";".join(f"{a}<{b}" for a, b in lat.covers()) or "-"
        fields = (
            f"size={L.size}",
            f"index={counts[L.size] - 1}",
            f"covers={covers}",
            f"modular={'yes' if modular else 'no'}",
            f"distributive={'yes' if distributive else 'no'}",
        )
        if args.format == "tsv":
            sys.stdout.write("LATTICE\t" + "\t".join(fields) + "\n")
        else:
            sys.stdout.write("lattice " + " ".join(fields) + "\n")
        emitted += 1
    if args.format == "text":
        for n in sorted(counts):
            sys.stdout.write(f"# size {n}: {counts[n]}\n")
        sys.stdout.write(f"# total: {emitted}\n")
    return 0


def cmd_paper_examples(args) -> int:
    results = run_reference_scenarios(ses_depth=args.ses_depth)
    for r in results:
        sys.stdout.write(r.line() + "\n")
    good = sum(1 for r in results if r.ok and not r.skipped)
    sys.stdout.write(f"# {good}/{len(results)} reproduced\n")
    return 0 if all(r.ok and not r.skipped for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monlat",
        description="kernels, cokernels and normal-subobject lattices of finite "
        "commutative monoids and monoidal semilattices",
    )
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    parser.add_argument("--jobs", type=int, default=1, metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse, validate and echo the canonical form")
    p.add_argument("input")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("nsub", help="export the lattice of normal subobjects")
    p.add_argument("input")
    p.set_defaults(fn=cmd_nsub)

    p = sub.add_parser("check", help="run a property checker")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--ses-depth", type=int, default=0, metavar="K")
    p.add_argument("input")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="all monoidal semilattices up to isomorphism")
    p.add_argument("--max-size", type=int, default=5, metavar="N")
    p.add_argument("--filter", choices=("nonmodular", "nondistributive"), default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser(
        "paper-examples", help="replay the bundled counterexample scenarios"
    )
    p.add_argument("--ses-depth", type=int, default=1, metavar="K")
    p.set_defaults(fn=cmd_paper_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    depth = getattr(args, "ses_depth", 0)
    if not 0 <= depth <= 3:
        print("ses depth must be between 0 and 3", file=sys.stderr)
        return 2
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
