"""Command line interface.

Four subcommands: classify (exhaustive enumeration with a written report
directory), analyze (single-structure report), verify (axiom and theorem
suites over a file, a corpus directory, or the bundled fixtures), and
export (DOT graphs). Exit codes are disjoint by failure class:

  0  success
  1  input or I/O error
  2  resource cap exceeded
  3  axiom failure
  4  asserted-invariant failure
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import (analyze, evaluate_all_claims, render_text,
                       run_asserted_suite, run_reported_suite)
from .core import (InputError, ResourceLimitError, dumps_structure,
                   load_structure, verify_axioms)
from .enumeration import classify, render_classification_text
from .fixtures import DERIVED
from .ideals import lattice_dot
from .quotient import (bourne_congruence, congruence_to_ideal,
                       enumerate_congruences)
from .spectrum import spectrum_dot

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_AXIOMS = 3
EXIT_ASSERT = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; 2 is reserved for resource caps here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_classify(args) -> int:
    report = classify(args.order, args.gamma, jobs=args.jobs)
    text = render_classification_text(report)
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        for idx, s in enumerate(report.representatives):
            path = os.path.join(args.out, f"structure_{idx:03d}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(dumps_structure(s))
        with open(os.path.join(args.out, "report.json"), "w",
                  encoding="utf-8") as fh:
            fh.write(_dump_json(report.to_dict()))
        with open(os.path.join(args.out, "report.txt"), "w",
                  encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    s = load_structure(args.file)
    report = analyze(s)
    if args.format == "json":
        _write_or_print(_dump_json(report), args.out)
    else:
        _write_or_print(render_text(report), args.out)
    return EXIT_OK if report["axioms"]["passed"] else EXIT_AXIOMS


def _verify_structure(s, suite: str, label: str) -> int:
    rep = verify_axioms(s)
    if not rep.passed:
        print(f"{label}: axioms FAIL")
        for v in rep.failures():
            print(f"  {v.law} at {tuple(v.args)}: {v.lhs} != {v.rhs}")
        return EXIT_AXIOMS
    print(f"{label}: axioms pass")
    if suite == "axioms":
        return EXIT_OK

    code = EXIT_OK
    for c in run_asserted_suite(s):
        if c.ok is None:
            print(f"  [skip] {c.name}: {c.note}")
        elif c.ok:
            print(f"  [pass] {c.name}")
        else:
            code = EXIT_ASSERT
            print(f"  [FAIL] {c.name}")
            for w in c.witnesses[:5]:
                print(f"         witness: {w}")
    for c in run_reported_suite(s):
        if c.ok:
            print(f"  [reported] {c.name}: holds exhaustively")
        else:
            print(f"  [reported] {c.name}: {len(c.witnesses)} discrepancies,"
                  f" first: {c.witnesses[0]}")
    return code


def _roundtrip_collisions(s) -> tuple:
    total = 0
    collisions = 0
    for rho in enumerate_congruences(s):
        total += 1
        if bourne_congruence(s, congruence_to_ideal(s, rho)) != rho:
            collisions += 1
    return collisions, total


def _verify_fixtures() -> int:
    print("bundled fixtures: reported comparisons and documented claims")
    print()
    for name, s in DERIVED.items():
        print(f"fixture {name} (order {s.order}):")
        for c in run_reported_suite(s):
            if c.ok:
                print(f"  [reported] {c.name}: holds exhaustively")
            else:
                print(f"  [reported] {c.name}: {len(c.witnesses)}"
                      f" discrepancies, first: {c.witnesses[0]}")
        bad, total = _roundtrip_collisions(s)
        print(f"  congruence round-trip collisions: {bad} of {total}"
              " congruences do not return to themselves")
    print()
    print("documented claims, re-evaluated against the literal definitions:")
    verdicts = evaluate_all_claims()
    width = max(len(v["id"]) for v in verdicts)
    for v in verdicts:
        print(f"  {v['id']:<{width}}  {v['verdict']:<13} {v['text']}")
        if v["verdict"] != "confirmed" and v["witness"] is not None:
            print(f"  {'':<{width}}  witness: {v['witness']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    target = args.target
    if os.path.isdir(target):
        files = sorted(f for f in os.listdir(target)
                       if f.endswith(".json") and f != "report.json")
        if not files:
            raise InputError(f"no structure files in {target}")
        worst = EXIT_OK
        # precedence: input error, then axiom failure, then assertion failure
        rank = {EXIT_INPUT: 3, EXIT_AXIOMS: 2, EXIT_ASSERT: 1, EXIT_OK: 0}
        for fname in files:
            s = load_structure(os.path.join(target, fname))
            code = _verify_structure(s, args.suite, fname)
            if rank[code] > rank[worst]:
                worst = code
        return worst
    if os.path.exists(target):
        s = load_structure(target)
        return _verify_structure(s, args.suite, target)
    if target == "fixtures":
        return _verify_fixtures()
    raise InputError(f"no such file or directory: {target}")


def cmd_export(args) -> int:
    s = load_structure(args.file)
    dot = lattice_dot(s) if args.target == "ideals" else spectrum_dot(s)
    _write_or_print(dot, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tgs", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="enumerate all structures of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--gamma", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="directory for representatives and reports")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", help="full report for one structure file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify",
                       help="run suites over a file, a directory, or the"
                            " reserved target 'fixtures'")
    p.add_argument("target")
    p.add_argument("--suite", choices=("axioms", "theorems", "all"),
                   default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT graph of the ideal lattice or spectrum")
    p.add_argument("file")
    p.add_argument("--target", choices=("ideals", "spec"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
