"""Command line entry point: ``edgereg {invariants,sweep,complex,selftest}``.

Exit codes: 0 when every applicable check passes, 1 when some check fails,
2 on malformed input or arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from edgereg.harness.library import library
from edgereg.harness.selftest import run_selftest
from edgereg.harness.sweep import ReportWriter, SweepSummary, load_graphs, run_sweep
from edgereg.harness.theorems import MAX_SWEEP_N, RunConfig, check_join, verify_complex, verify_graph
from edgereg.harness.graph6 import parse_graph6
from edgereg.simplicial import SimplicialComplex

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _cycles(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated cycle lengths, got {text!r}") from None
    if any(k < 3 for k in out):
        raise argparse.ArgumentTypeError("cycle lengths must be at least 3")
    return out


def _common(p: argparse.ArgumentParser, max_n_default=7):
    p.add_argument("--max-n", type=int, default=max_n_default,
                   help=f"largest vertex count to accept (at most {MAX_SWEEP_N})")
    p.add_argument("--field", type=int, default=2, help="prime characteristic of the coefficient field")
    p.add_argument("--cycles", type=_cycles, default=(5,),
                   help="cycle lengths in the H-family besides K2, comma separated (default 5)")
    p.add_argument("--pc-mode", choices=("existential", "strict"), default="existential",
                   help="how basic 5-cycles must cover the non-pendant vertices")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl", help="report format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgereg", description="Regularity bounds for edge ideals, checked exhaustively.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="report invariants and checks for individual graphs")
    p.add_argument("graph6", nargs="*", help="graph6 strings")
    p.add_argument("--input", help="file of graph6 lines or edge lists")
    p.add_argument("--input-format", choices=("auto", "graph6", "edges"), default="auto")
    _common(p, max_n_default=MAX_SWEEP_N)

    p = sub.add_parser("sweep", help="check every graph of an enumeration or file")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--input", help="file of graph6 lines or edge lists instead of the enumeration")
    p.add_argument("--input-format", choices=("auto", "graph6", "edges"), default="auto")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("-o", "--output", help="write reports here; '-' for stdout (the summary then goes to stderr)")
    _common(p)

    p = sub.add_parser("complex", help="check directly given simplicial complexes")
    p.add_argument("--input", help='JSON lines {"name": ..., "n": ..., "facets": [[...], ...]}')
    p.add_argument("--library", action="store_true", help="use the built-in library of complexes")
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--max-join-n", type=int, default=10, help="only test joins with this many vertices or fewer")
    p.add_argument("--format", choices=("jsonl",), default="jsonl")

    p = sub.add_parser("selftest", help="check fixed example values")
    p.add_argument("--field", type=int, default=2)
    return parser


def read_complexes(path: str) -> list[tuple[str, SimplicialComplex]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                rec = json.loads(line)
                c = SimplicialComplex.from_facets(int(rec["n"]), rec["facets"])
            except (ValueError, KeyError, TypeError) as exc:
                raise ValueError(f"{path} line {lineno}: {exc}") from None
            out.append((rec.get("name") or f"complex {len(out)}", c))
    return out


def _config(args, **extra) -> RunConfig:
    return RunConfig(max_n=args.max_n, field=args.field, cycles=args.cycles, pc_mode=args.pc_mode,
                     output_format=args.format, **extra)


def cmd_invariants(args) -> int:
    cfg = _config(args)
    graphs = [(s, parse_graph6(s)) for s in args.graph6]
    if args.input:
        graphs += [(None, g) for g in load_graphs(args.input, args.input_format)]
    if not graphs:
        raise ValueError("give graph6 strings or --input")
    writer = ReportWriter(sys.stdout, cfg.output_format)
    failed = 0
    for i, (name, g) in enumerate(graphs):
        report = verify_graph(g, cfg, index=i, name=name)
        writer.write(report)
        failed += bool(report.failures)
    print(f"{len(graphs)} graph(s), {failed} with failing checks", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _config(args, min_n=args.min_n, input=args.input, input_format=args.input_format, jobs=args.jobs)
    if args.output == "-":
        summary = run_sweep(cfg, sys.stdout, sys.stderr)
    else:
        ctx = open(args.output, "w", encoding="utf-8", newline="") if args.output else nullcontext(None)
        with ctx as fh:
            summary = run_sweep(cfg, fh, sys.stdout)
    return EXIT_FAIL if summary.total_failures else EXIT_OK


def cmd_complex(args) -> int:
    items = []
    if args.library:
        items += [(entry.name, entry.complex) for entry in library()]
    if args.input:
        items += read_complexes(args.input)
    if not items:
        raise ValueError("give --input or --library")
    failures = 0
    counts = SweepSummary()
    for i, (name, c) in enumerate(items):
        report = verify_complex(c, args.field, name=name, index=i)
        print(json.dumps(report.to_json()))
        for v in report.verdicts:
            if v.applicable:
                counts.applicable[v.id] += 1
                counts.passed[v.id] += bool(v.passed)
                counts.failed[v.id] += not v.passed
        failures += bool(report.failures)
    for a in range(len(items)):
        for b in range(a, len(items)):
            c1, c2 = items[a][1], items[b][1]
            if c1.n + c2.n > args.max_join_n:
                continue
            v = check_join(c1, c2, args.field)
            counts.applicable["T10"] += 1
            counts.passed["T10"] += bool(v.passed)
            if not v.passed:
                counts.failed["T10"] += 1
                failures += 1
                print(json.dumps({"join": [items[a][0], items[b][0]], "verdict": v.to_json()}))
    for tid in ("T8", "T9", "T10"):
        print(f"{tid}: applicable {counts.applicable[tid]}, passed {counts.passed[tid]}, failed {counts.failed[tid]}",
              file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_selftest(args) -> int:
    failed = run_selftest(args.field, sys.stdout)
    print(f"selftest: {'FAIL' if failed else 'PASS'} ({failed} failing)")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"invariants": cmd_invariants, "sweep": cmd_sweep, "complex": cmd_complex, "selftest": cmd_selftest}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"edgereg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
