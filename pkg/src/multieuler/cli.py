"""Command-line entry point ``euler``.

Exit codes: 0 success, 1 domain error (e.g. a circuit requested from a graph
that has none), 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import sys

from .core import MultiGraph, parse, serialize, to_dot
from .counting import Convention, count, fstar_search
from .eulerian import classify, find_euler_circuit, find_euler_path
from .exceptions import EulerError, GraphError, ParseError
from .selftest import check_universe
from .twoway import FAMILIES, FamilySpec, double, generate


def _convention(text: str) -> Convention:
    try:
        return Convention.parse(text)
    except GraphError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="euler", description="Eulerian multidigraph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--input", "-i", help="graph file (default: stdin)")
        p.add_argument("--double", action="store_true",
                       help="read edges as undirected and take the two-way doubling")
        p.add_argument("--emit-dot", metavar="PATH", help="also write the graph as DOT")

    p = sub.add_parser("generate", help="write a family member in graph format")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--mu", type=int, default=1, help="uniform edge multiplicity")
    p.add_argument("--max-edges", type=int)
    p.add_argument("--emit-dot", metavar="PATH")

    for name, text in [("classify", "print the Eulerian verdict"),
                       ("circuit", "print an Eulerian dicircuit"),
                       ("path", "print an Eulerian dipath")]:
        graph_input(sub.add_parser(name, help=text))

    p = sub.add_parser("count", help="count Eulerian circuits (JSON)")
    graph_input(p)
    p.add_argument("--convention", type=_convention, default=Convention("cyclic"))
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms")

    p = sub.add_parser("fstar", help="search for the f*(n) maximizer (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "randomized"), default="exhaustive")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--convention", type=_convention, default=Convention("fixed-start"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--emit-dot", metavar="PATH")

    p = sub.add_parser("selftest", help="run the brute-force oracle over small graphs")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=5)
    return parser


def _read_graph(args):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    d = parse(text)
    if args.double:
        d = double(MultiGraph(d.n, d.edges))
    return d


def _emit_dot(args, d):
    if getattr(args, "emit_dot", None):
        with open(args.emit_dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(d))


def _run(args) -> int:
    out = sys.stdout
    if args.command == "generate":
        mu = None
        base = FamilySpec(args.family, args.n, seed=args.seed, max_edges=args.max_edges)
        g = generate(base)
        if args.mu != 1:
            mu = {e: args.mu for e in set(g.edges)}
            g = generate(FamilySpec(args.family, args.n, seed=args.seed,
                                    mu=mu, max_edges=args.max_edges))
        _emit_dot(args, double(g))
        out.write(f"# family={args.family} n={args.n} seed={args.seed} mu={args.mu}\n")
        out.write(serialize(g))
        return 0

    if args.command == "fstar":
        report = fstar_search(args.n, args.mode, args.seed, args.budget,
                              args.convention, args.workers)
        if report.best_graph is not None:
            g = parse(report.best_graph)
            _emit_dot(args, double(MultiGraph(g.n, g.edges)))
        out.write(report.to_json(pretty=args.pretty, timing=args.timing) + "\n")
        return 0

    if args.command == "selftest":
        checked, failures = check_universe(args.max_n, args.max_m)
        for line in failures:
            print(line, file=sys.stderr)
        out.write(f"selftest: {checked} graphs checked, {len(failures)} mismatches\n")
        return 0 if not failures else 1

    d = _read_graph(args)
    _emit_dot(args, d)
    if args.command == "classify":
        out.write(f"{classify(d)}\n")
    elif args.command in ("circuit", "path"):
        trail = find_euler_circuit(d) if args.command == "circuit" else find_euler_path(d)
        out.write(trail.format(d) + "\n")
        out.write("edges: " + " ".join(map(str, trail.edges)) + "\n")
    elif args.command == "count":
        report = count(d, args.convention)
        out.write(report.to_json(pretty=args.pretty, timing=args.timing) + "\n")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"euler: parse error: {exc}", file=sys.stderr)
        return 2
    except EulerError as exc:
        print(f"euler: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"euler: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
