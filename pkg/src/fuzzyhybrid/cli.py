"""Command-line front end: ``gfps {check,run,outcomes,alpha,card,laws} FILE``.

Exit status is 0 on success, 1 for usage, file or parse problems and 2 when
``run`` stops on its step budget.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .frames import Degree, format_degree, format_rational
from .language import ParseError, SourceDocument, parse, parse_degree
from .laws import check_all
from .psystem import (
    OutcomeLimitError,
    decimal_text,
    enumerate_step_outcomes,
    initial_configuration,
    run,
)


class _Usage(Exception):
    pass


def _load(path: str):
    if path == "-":
        text, origin = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as e:
            raise _Usage(f"cannot read {path}: {e}") from None
        origin = path
    return parse(SourceDocument(text, origin))


def _region(system, label: Optional[int]) -> int:
    label = system.skin.label if label is None else label
    if label not in system.membranes:
        raise _Usage(f"unknown region {label}")
    return label


def cmd_check(args, out) -> int:
    _load(args.file)
    print("ok", file=out)
    return 0


def cmd_run(args, out) -> int:
    system = _load(args.file)

    def trace(n, selection, config):
        for label in sorted(selection):
            fired = ", ".join(
                f"{times}x[{system.rules_of(label)[i]}]"
                for i, times in sorted(selection[label].items())
            )
            print(f"step {n} membrane {label}: {fired}", file=sys.stderr)
        print(f"step {n} -> {config}", file=sys.stderr)

    report = run(system, args.seed, args.max_steps, trace if args.trace else None)
    print(report.to_record() if args.json else report.to_text(), file=out)
    return 0 if report.halted else 2


def cmd_outcomes(args, out) -> int:
    system = _load(args.file)
    try:
        outcomes = enumerate_step_outcomes(initial_configuration(system), system, args.limit)
    except OutcomeLimitError as e:
        raise _Usage(str(e)) from None
    rendered = sorted(str(c) for c in outcomes)
    print(f"{len(rendered)} outcome(s)", file=out)
    for line in rendered:
        print(line, file=out)
    return 0


def cmd_alpha(args, out) -> int:
    system = _load(args.file)
    label = _region(system, args.region)
    try:
        alpha = parse_degree(args.alpha, system.frame)
    except ParseError as e:
        raise _Usage(f"malformed degree {args.alpha!r}: {e.diagnostics[0].message}") from None
    cut = system.contents_of(label).alpha_cut(alpha)
    for x, n in cut.items():
        print(f"{x}*{n}", file=out)
    return 0


def cmd_card(args, out) -> int:
    system = _load(args.file)
    contents = system.contents_of(_region(system, args.region))
    q = contents.strong_cardinality() if args.strong else contents.cardinality()
    print(f"{format_rational(q)} ({decimal_text(q)})", file=out)
    return 0


def cmd_laws(args, out) -> int:
    system = _load(args.file)
    results = check_all(system.frame, seed=args.seed)
    for r in results:
        print(r, file=out)
        if not r.passed:
            shown = "; ".join(
                format_degree(v) if isinstance(v, Degree) else "{" + str(v) + "}"
                for v in r.counterexample
            )
            print(f"  counterexample: {shown}", file=out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfps", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="system description (.gfps), or - for stdin")
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "parse and validate")
    sp = add("run", cmd_run, "run to halting")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-steps", type=int, default=10_000)
    sp.add_argument("--trace", action="store_true", help="per-step trace on stderr")
    sp.add_argument("--json", action="store_true", help="machine-readable result line")
    sp = add("outcomes", cmd_outcomes, "all one-step outcomes of the initial configuration")
    sp.add_argument("--limit", type=int, default=10_000)
    sp = add("alpha", cmd_alpha, "alpha-cut of a region's initial contents")
    sp.add_argument("--region", type=int)
    sp.add_argument("--alpha", required=True)
    sp = add("card", cmd_card, "cardinality of a region's initial contents")
    sp.add_argument("--region", type=int)
    sp.add_argument("--strong", action="store_true")
    sp = add("laws", cmd_laws, "self-check the algebraic laws on the file's frame")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        return args.func(args, out)
    except ParseError as e:
        for d in e.diagnostics:
            print(d.format(e.origin), file=sys.stderr)
        return 1
    except _Usage as e:
        print(f"gfps: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
