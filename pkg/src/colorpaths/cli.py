"""Command-line entry point: ``colorpaths <verb> ...``.

Exit codes: 0 success, 1 error or failed check, 2 the C7 exception,
3 unsupported input.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from .certify import format_coloring, parse_coloring, verify_solution
from .engine import EXCEPTION_C7, SOLVED, solve, write_trace
from .graph import (
    GraphSpec,
    LimitExceeded,
    ParseError,
    chromatic_number,
    generate,
    is_connected,
    parse_graph,
    to_dimacs,
)
from .oracle import sweep_small_graphs

log = logging.getLogger("colorpaths")

EXIT_OK, EXIT_ERROR, EXIT_C7, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _read_graph(args):
    return parse_graph(Path(args.input).read_bytes(), args.format)


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_color(args) -> int:
    g = _read_graph(args)
    if not is_connected(g):
        print("error: graph is disconnected; color each component separately", file=sys.stderr)
        return EXIT_ERROR
    outcome = solve(g, seed=args.seed)
    if args.trace:
        write_trace(outcome, args.trace)
    for k, rec in enumerate(outcome.trace):
        log.info(rec.line(k))
    if outcome.status == SOLVED:
        _emit(format_coloring(outcome.coloring), args.output)
        return EXIT_OK
    if outcome.status == EXCEPTION_C7:
        print("C7 exception: the 7-cycle has no coloring in which every vertex "
              "starts a colorful path", file=sys.stderr)
        return EXIT_C7
    print(f"unsupported: {outcome.message}", file=sys.stderr)
    return EXIT_UNSUPPORTED


def cmd_verify(args) -> int:
    g = _read_graph(args)
    c = parse_coloring(Path(args.coloring).read_bytes())
    if len(c) != g.n:
        print(f"error: coloring has {len(c)} vertices, graph has {g.n}", file=sys.stderr)
        return EXIT_ERROR
    ok, report = verify_solution(g, c, check_chromatic=args.check_chi)
    sys.stdout.write(report.render())
    print("OK" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_chi(args) -> int:
    g = _read_graph(args)
    try:
        print(chromatic_number(g, limit=args.limit))
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GraphSpec(
        kind=args.kind, n=args.n, m=args.m, chi=args.chi, p=args.p,
        seed=args.seed, triangle_free=args.triangle_free,
    )
    g = generate(spec)
    _emit(to_dimacs(g, comment=f"{args.kind} n={g.n} seed={args.seed}"), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    summary = sweep_small_graphs(args.n_max, args.chi, jobs=args.jobs)
    sys.stdout.write(summary.text())
    if args.output:
        Path(args.output).write_text(summary.to_json())
    return EXIT_OK if summary.discrepancies == 0 else EXIT_ERROR


_STEP = re.compile(r"step=(\d+) move=(\S+) arg=(\S+) height=(\S+) B=(\d+)")


def cmd_trace(args) -> int:
    path = Path(args.input)
    if path.is_dir():
        path = path / "trace.txt"
    rows = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip():
            continue
        m = _STEP.fullmatch(line.strip())
        if not m:
            raise ParseError("not a trace line", lineno)
        rows.append(m.groups())
    print(f"{'step':>4}  {'move':<14} {'height':>6} {'|B|':>4}  argument")
    for step, move, arg, height, unc in rows:
        print(f"{step:>4}  {move:<14} {height:>6} {unc:>4}  {arg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorpaths", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="verb", required=True)

    def graph_input(p, required=True):
        p.add_argument("-i", "--input", required=required, help="graph file")
        p.add_argument("-f", "--format", choices=("dimacs", "edge-list"), default="dimacs")

    p = sub.add_parser("color", help="find a coloring where every vertex starts a colorful path")
    graph_input(p)
    p.add_argument("-o", "--output", help="coloring file (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", metavar="DIR", help="write trace.txt and DOT snapshots here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    graph_input(p)
    p.add_argument("-c", "--coloring", required=True)
    p.add_argument("--check-chi", action="store_true", help="also require chi(G) colors exactly")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chi", help="exact chromatic number")
    graph_input(p)
    p.add_argument("--limit", type=int, default=8)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("gen", help="write a generated graph in DIMACS format")
    p.add_argument("--kind", required=True,
                   choices=("cycle", "complete", "complete-bipartite", "random-chromatic"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0, help="second side for complete-bipartite")
    p.add_argument("--chi", type=int, default=3)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="exhaustive check over all small labeled graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--chi", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", help="machine-readable JSON summary")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("trace", help="re-render a trace written by 'color --trace'")
    p.add_argument("-i", "--input", required=True, help="trace.txt or its directory")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
