"""Command-line front end.

Subcommands: solve, verify, bounds, table, construct, dor, encode.
Reports are JSON (or CSV for tables) on stdout; timing statistics go to
stderr so stdout is byte-stable for fixed inputs.  Exit codes: 0 for
exact/infinite results, valid witnesses, and certified constructions;
1 for usage errors and malformed files; 2 for atleast/unknown outcomes;
3 for failed verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, constructions, encoder, solver
from .core import Params, find_mono_triple, read_witness, write_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _check_threads_env() -> None:
    # accepted for compatibility; the search engine is sequential and
    # results do not depend on it
    raw = os.environ.get("ABTRIPLE_THREADS")
    if raw is None:
        return
    try:
        workers = int(raw)
    except ValueError:
        raise SystemExit(EXIT_USAGE)
    if workers < 1:
        raise SystemExit(EXIT_USAGE)


def _params(args, r=None) -> Params:
    return Params(args.a, args.b, r if r is not None else args.r)


def _budget(args) -> solver.Budget | None:
    ms = getattr(args, "budget_ms", None)
    return solver.Budget.from_ms(ms) if ms is not None else None


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _emit_stats(stats: solver.SearchStats) -> None:
    print(json.dumps(stats.to_dict(), sort_keys=True), file=sys.stderr)


def _witness_doc(coloring) -> dict:
    return {
        "a": coloring.params.a,
        "b": coloring.params.b,
        "r": coloring.params.r,
        "n": coloring.n,
        "colors": list(coloring.colors),
    }


def _solve_row(a, b, r, outcome) -> list[str]:
    if outcome.status == "exact":
        value = str(outcome.value)
    elif outcome.status == "infinite":
        value = "inf"
    elif outcome.status == "atleast":
        value = f"≥{outcome.value}"
    else:
        value = f"≥{outcome.witness.n + 1}" if outcome.witness else ""
    lower = ""
    upper = ""
    if r == 2:
        report = bounds.best_known(a, b)
        lower = str(report.best_lower)
        upper = str(report.best_upper) if report.best_upper is not None else ""
    return [str(a), str(b), str(r), outcome.status, value, lower, upper, str(outcome.stats.ms)]


def cmd_solve(args) -> int:
    try:
        params = _params(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    outcome = solver.compute_T(params, cap=args.cap, budget=_budget(args))
    if args.format == "csv":
        print("a,b,r,status,value,lower,upper,ms")
        print(",".join(_solve_row(params.a, params.b, params.r, outcome)))
    else:
        doc = {"a": params.a, "b": params.b, "r": params.r, "status": outcome.status}
        if outcome.value is not None:
            doc["value"] = outcome.value
        if outcome.witness is not None:
            doc["witness"] = _witness_doc(outcome.witness)
        _emit(doc)
    _emit_stats(outcome.stats)
    if args.out and outcome.witness is not None:
        write_witness(args.out, outcome.witness)
    return EXIT_OK if outcome.status in ("exact", "infinite") else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    try:
        coloring = read_witness(args.witness)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    bad = find_mono_triple(coloring)
    if bad is None:
        print("valid")
        return EXIT_OK
    print(f"invalid: monochromatic triple {bad.as_tuple()}")
    return EXIT_INVALID


def cmd_bounds(args) -> int:
    try:
        report = bounds.best_known(args.a, args.b)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json())
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_a < 1 or args.max_b < 1:
        print("error: limits must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.r >= 3 and args.cap is None:
        print("error: --cap is required for r >= 3", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget(args) or solver.Budget(max_seconds=60.0)
    rows = []
    for a in range(1, args.max_a + 1):
        for b in range(a, args.max_b + 1):
            try:
                outcome = solver.compute_T(Params(a, b, args.r), cap=args.cap, budget=budget)
            except Exception as e:  # a failed cell must not kill the table
                print(f"cell ({a},{b}): {e}", file=sys.stderr)
                outcome = solver.SolveOutcome("unknown", None, None, solver.SearchStats())
            rows.append(_solve_row(a, b, args.r, outcome))
    header = ["a", "b", "r", "status", "value", "lower", "upper", "ms"]
    if args.format == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    return EXIT_OK


def cmd_construct(args) -> int:
    build = {
        1: constructions.construct_2col,
        2: constructions.construct_3col,
        3: constructions.construct_4col,
    }[args.part]
    try:
        result = build(args.a)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LookupError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    doc = {
        "label": result.label,
        "a": result.a,
        "n": result.claimed_n,
        "certified": result.certified,
        "source": result.source,
    }
    if result.offending is not None:
        doc["offending_triple"] = list(result.offending.as_tuple())
    _emit(doc)
    if args.out:
        write_witness(args.out, result.coloring, label=result.label)
    return EXIT_OK if result.certified else EXIT_INVALID


def cmd_dor(args) -> int:
    if args.a == 1 and args.b == 1:
        cap_note = "infinite"
    elif args.b == 2 * args.a:
        cap_note = 1
    else:
        cap_note = 5
    try:
        probe = solver.dor_probe(
            args.a, args.b, args.max_r, cap=args.cap, budget=_budget(args)
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    results = []
    certified = 0
    total = solver.SearchStats()
    for r, outcome in probe:
        entry = {"r": r, "status": outcome.status, "nodes": outcome.stats.nodes}
        if outcome.value is not None:
            entry["value"] = outcome.value
        results.append(entry)
        if outcome.status == "exact":
            certified = r
        total.nodes += outcome.stats.nodes
        total.ms += outcome.stats.ms
    _emit(
        {
            "a": args.a,
            "b": args.b,
            "max_r": args.max_r,
            "dor_cap": cap_note,
            "certified_dor_lower_bound": certified,
            "results": results,
        }
    )
    _emit_stats(total)
    return EXIT_OK


def cmd_encode(args) -> int:
    try:
        params = _params(args)
        doc = encoder.encode(params, args.n)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = encoder.to_dimacs(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="abtriple", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ab(p, with_r=True):
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        if with_r:
            p.add_argument("--r", type=int, default=2)

    p = sub.add_parser("solve", help="compute the exact threshold T(a,b;r)")
    add_ab(p)
    p.add_argument("--cap", type=int, default=None, help="scan limit (required for r >= 3)")
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--out", default=None, help="write the witness JSON here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a witness coloring file")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="report every applicable bound formula")
    add_ab(p, with_r=False)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="reproduce the threshold table as CSV")
    p.add_argument("--max-a", type=int, required=True)
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget-ms", type=int, default=None, help="per cell, default 60000")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="build and certify an explicit coloring")
    p.add_argument("--part", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("dor", help="probe the degree of regularity over r = 1..max_r")
    add_ab(p, with_r=False)
    p.add_argument("--max-r", type=int, default=2)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget-ms", type=int, default=None)
    p.set_defaults(func=cmd_dor)

    p = sub.add_parser("encode", help="write the instance as DIMACS CNF")
    add_ab(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_encode)

    return parser


def main(argv=None) -> int:
    _check_threads_env()
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
