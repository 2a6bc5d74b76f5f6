"""Command-line interface.

Input arguments accept a path to an ".sgt" file, "-" for standard
input, or a built-in example id such as ex3.4 or powerset:3. Exit code
0 means success, 1 a domain error (bad table, unknown id), 2 a usage
error. All output is deterministic: running a command twice produces
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .catalog import builtin_example
from .enumeration import (
    EnumerationOptions,
    available_predicates,
    enumerate_semigroups,
    search,
)
from .errors import ValidationError, ZdgError
from .graph import adjacency_listing, gamma, gamma_bar, to_dot
from .report import (
    graph_block,
    invariants_block,
    invariants_text,
    render,
    table_block,
    verdict_block,
    verdict_rows,
)
from .semigroup import Semigroup, validate
from .sgt import dumps, loads
from .theorems import all_clauses, matches_selector, run_all


def _read_table(source: str):
    """Resolve an input argument to a CayleyTable, without validating."""
    if source == "-":
        return loads(sys.stdin.read())
    looks_like_path = (
        source.endswith(".sgt") or os.sep in source or source.startswith(".")
    )
    if looks_like_path or os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    return builtin_example(source).table


def _read_semigroup(source: str) -> Semigroup:
    return validate(_read_table(source))


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args) -> int:
    table = _read_table(args.input)
    try:
        s = validate(table)
    except ValidationError as err:
        for kind, members, text in err.violations:
            print("%s%r: %s" % (kind, tuple(members), text))
        if err.truncated:
            print("... more violations not shown")
        print("invalid: %s" % err)
        return 1
    print("valid: commutative semigroup with zero, order %d" % s.n)
    return 0


def _cmd_graph(args) -> int:
    s = _read_semigroup(args.input)
    g = gamma_bar(s) if args.bar else gamma(s)
    name = "gamma_bar" if args.bar else "gamma"
    if args.format == "dot":
        sys.stdout.write(to_dot(g, name=name))
    elif args.format == "report":
        sys.stdout.write(render(graph_block(g)))
    else:
        sys.stdout.write(adjacency_listing(g))
    return 0


def _cmd_invariants(args) -> int:
    s = _read_semigroup(args.input)
    if args.format == "report":
        sys.stdout.write(render(invariants_block(s)))
    else:
        sys.stdout.write(invariants_text(s))
    return 0


def _cmd_check(args) -> int:
    s = _read_semigroup(args.input)
    verdicts = run_all(s, size_cap=args.cutset_cap)
    picked = []
    for composite in verdicts:
        whole = matches_selector(composite.theorem_id, args.theorem)
        for clause in composite.clauses:
            if whole or matches_selector(clause.theorem_id, args.theorem):
                picked.append(clause)
    if args.format == "report":
        block = {
            "selector": args.theorem,
            "clauses": [verdict_block(c) for c in picked],
        }
        sys.stdout.write(render(block))
    else:
        sys.stdout.write(verdict_rows(picked))
    return 0


def _write_corpus(stream) -> int:
    first = True
    for s in stream:
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(dumps(s.table))
        first = False
    return 0


def _cmd_enumerate(args) -> int:
    opts = EnumerationOptions(
        order=args.order,
        up_to_iso=args.up_to_iso,
        require_reduced=args.reduced,
        limit=args.limit,
    )
    return _write_corpus(enumerate_semigroups(opts, workers=args.workers))


def _cmd_search(args) -> int:
    opts = EnumerationOptions(
        order=args.order,
        up_to_iso=args.up_to_iso,
        require_reduced=args.reduced,
        limit=args.limit,
    )
    return _write_corpus(search(opts, args.predicate, workers=args.workers))


def _cmd_example(args) -> int:
    s = builtin_example(args.id)
    if args.format == "report":
        sys.stdout.write(render(table_block(s.table)))
    else:
        sys.stdout.write(dumps(s.table))
    return 0


# -- parser --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zdg",
        description="Zero-divisor graphs of finite commutative semigroups "
        "with zero: validation, graphs, invariants, structure checks, "
        "enumeration and search.",
    )
    p.add_argument("--version", action="version", version="zdg " + __version__)
    sub = p.add_subparsers(dest="verb", required=True)

    def add_input(sp):
        sp.add_argument(
            "input",
            help="path to an .sgt file, '-' for standard input, or a "
            "built-in example id",
        )

    sp = sub.add_parser("validate", help="check the semigroup laws")
    add_input(sp)
    sp.set_defaults(fn=_cmd_validate)

    sp = sub.add_parser("graph", help="print the zero-divisor graph")
    add_input(sp)
    sp.add_argument("--bar", action="store_true", help="use the xSy=0 variant")
    sp.add_argument(
        "--format", choices=("text", "report", "dot"), default="text"
    )
    sp.set_defaults(fn=_cmd_graph)

    sp = sub.add_parser("invariants", help="print graph and ideal invariants")
    add_input(sp)
    sp.add_argument("--format", choices=("text", "report"), default="text")
    sp.set_defaults(fn=_cmd_invariants)

    sp = sub.add_parser("check", help="run the structure checks")
    add_input(sp)
    sp.add_argument(
        "--theorem",
        default="all",
        help="clause selector: a number like 2.2, a full clause id, or all",
    )
    sp.add_argument(
        "--cutset-cap",
        type=int,
        default=4,
        metavar="K",
        help="largest cutset size searched exhaustively (default 4)",
    )
    sp.add_argument("--format", choices=("text", "report"), default="text")
    sp.set_defaults(fn=_cmd_check)

    def add_corpus_flags(sp):
        sp.add_argument("--order", type=int, required=True, metavar="N")
        sp.add_argument("--up-to-iso", action="store_true")
        sp.add_argument("--reduced", action="store_true")
        sp.add_argument("--limit", type=int, default=None, metavar="M")
        sp.add_argument("--workers", type=int, default=1, metavar="W")

    sp = sub.add_parser(
        "enumerate", help="generate all semigroups of one order as .sgt records"
    )
    add_corpus_flags(sp)
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser(
        "search", help="filter enumerated semigroups by a graph predicate"
    )
    add_corpus_flags(sp)
    sp.add_argument(
        "--predicate",
        required=True,
        metavar="P",
        help="one of %s; girth and complete-rpartite take a colon "
        "argument, e.g. girth:4" % ", ".join(available_predicates()),
    )
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("example", help="emit a built-in example table")
    sp.add_argument("id", help="example id, e.g. ex3.4 or powerset:3")
    sp.add_argument("--format", choices=("sgt", "report"), default="sgt")
    sp.set_defaults(fn=_cmd_example)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return 0
    except ZdgError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
