"""Command line entry point.

Exit codes: 0 success, 1 negative result, 2 usage or parse error,
3 infeasible parameters, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .coloring import (
    BudgetExhausted,
    ColorAssignment,
    ColoringError,
    Outcome,
    SearchBudget,
    chromatic_number,
    extension_verdict,
    smallest_defining_set,
)
from .constructions import ConstructionError, InternalRecipeInconsistency, feasibility
from .graph import GraphError
from .sweep import BUILDERS, Instance, audit_instance, instances
from .tables import TABLES, reproduce

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.node_limit, time_limit=args.time_limit)


def _claimed(family: str, p: dict) -> tuple[int, int, int]:
    """(n, r, k) that the family promises for these parameters."""
    k = p["k"]
    if family == "glk":
        return p["l"] * k, 2 * (k - 1), k
    if family == "t1":
        return 3 * k - 1, 2 * (k - 1) + p["t"], k
    if family in ("t2", "t3"):
        return 2 * k + p["s"], 2 * (k - 1), k
    return 2 * k + p["s"], 2 * (k - 1) + p["t"], k


def cmd_construct(args) -> int:
    names = BUILDERS[args.family][1]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        params[name] = value
    n, r, k = _claimed(args.family, params)
    verdict = feasibility(n, r, k)
    if not verdict.feasible:
        print(f"infeasible: {verdict.reason.value} (n={n} r={r} k={k})")
        return EXIT_INFEASIBLE
    try:
        res = Instance.of(args.family, **params).build(verify=not args.no_verify)
    except ConstructionError as exc:
        print(f"infeasible: {exc.reason} ({exc})")
        return EXIT_INFEASIBLE
    except InternalRecipeInconsistency as exc:
        print(f"recipe failure: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.out:
        if str(args.out).endswith(".g6"):
            io.write_graph6(res.graph, args.out)
        else:
            io.write_graph(res.graph, args.out)
    if args.trace:
        io.write_trace(res.trace, args.trace)
    if args.coloring:
        io.write_coloring(res.canonical_coloring, args.coloring)
    if args.defining:
        io.write_coloring(res.defining_set, args.defining)
    if args.dot:
        text = io.export_dot(res.graph, res.canonical_coloring, highlight=res.defining_set.keys())
        Path(args.dot).write_text(text)
    print(res.summary())
    return EXIT_OK


def cmd_chi(args) -> int:
    g = io.read_graph(args.graph)
    print(f"chi={chromatic_number(g, _budget(args))}")
    return EXIT_OK


def cmd_verify_defining(args) -> int:
    g = io.read_graph(args.graph)
    s = io.read_coloring(args.coloring)
    k = args.chi if args.chi is not None else chromatic_number(g, _budget(args))
    if max(s.values(), default=0) > k:
        raise UsageError(f"coloring uses colors above {k}")
    s = ColorAssignment(k, dict(s.items()))
    verdict = extension_verdict(g, s, k, _budget(args))
    print(verdict.outcome.value)
    return EXIT_OK if verdict.outcome is Outcome.UNIQUE else EXIT_NEGATIVE


def cmd_defining_number(args) -> int:
    g = io.read_graph(args.graph)
    best = smallest_defining_set(g, _budget(args), min_size=0 if args.full else None)
    print(f"d={len(best)}")
    print("witness=" + ",".join(f"{v}:{c}" for v, c in sorted(best.items(), key=lambda kv: g.index(kv[0]))))
    return EXIT_OK


def cmd_feasible(args) -> int:
    verdict = feasibility(args.n, args.r, args.k)
    print(f"feasible={str(verdict.feasible).lower()} reason={verdict.reason.value}")
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def cmd_repro(args) -> int:
    if args.table not in TABLES:
        raise UsageError(f"unknown table {args.table}; choose from {sorted(TABLES)}")
    report = reproduce(args.table)
    print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_audit(args) -> int:
    if args.kmax < 3:
        raise UsageError("--kmax must be at least 3")
    budget = _budget(args)
    rows = []
    for inst in instances(args.kmax):
        row = audit_instance(inst, budget)
        rows.append(row)
        print(row.line(), flush=True)
    failed = [r for r in rows if not r.ok]
    print(f"audited={len(rows)} passed={len(rows) - len(failed)} failed={len(failed)}")
    if failed:
        print(f"first failure: {failed[0].instance}")
        return EXIT_NEGATIVE
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="regdef", description="Regular graphs with small defining sets.")
    p.add_argument("--node-limit", type=int, default=50_000_000)
    p.add_argument("--time-limit", type=float, default=600.0)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build one graph of a family")
    c.add_argument("--family", required=True, choices=sorted(BUILDERS))
    for name in ("k", "l", "s", "t"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--out", type=Path, help="graph file (.json or .g6)")
    c.add_argument("--trace", type=Path)
    c.add_argument("--dot", type=Path)
    c.add_argument("--coloring", type=Path, help="write the canonical coloring")
    c.add_argument("--defining", type=Path, help="write the defining set")
    c.add_argument("--no-verify", action="store_true", help="skip the built-in audit")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("chi", help="exact chromatic number")
    c.add_argument("graph", type=Path)
    c.set_defaults(func=cmd_chi)

    c = sub.add_parser("verify-defining", help="does a partial coloring extend uniquely")
    c.add_argument("graph", type=Path)
    c.add_argument("coloring", type=Path)
    c.add_argument("--chi", type=int)
    c.set_defaults(func=cmd_verify_defining)

    c = sub.add_parser("defining-number", help="exact defining number")
    c.add_argument("graph", type=Path)
    c.add_argument("--full", action="store_true", help="also search sizes below chi-1")
    c.set_defaults(func=cmd_defining_number)

    c = sub.add_parser("feasible", help="necessary conditions on (n, r, k)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=cmd_feasible)

    c = sub.add_parser("repro", help="regenerate a deleted-edge table")
    c.add_argument("--table", type=int, required=True)
    c.set_defaults(func=cmd_repro)

    c = sub.add_parser("audit", help="audit every instance up to kmax")
    c.add_argument("--kmax", type=int, required=True)
    c.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (io.FormatError, GraphError, ColoringError, OSError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: bounds={exc.bounds}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
