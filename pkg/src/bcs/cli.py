"""Command-line entry point: ``bcs {solve,verify,gen,detect,reduce}``.

Exit codes: 0 ok, 1 input or usage error, 2 unsupported instance,
3 not_balanced and 4 not_connected (``verify`` only).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bipartite import solve_bipartite_proper
from .classify import classify
from .diam2 import solve_diam2
from .dispatch import solve_auto
from .errors import BcsError, Unsupported
from .generate import CLASSES, generate
from .graph import Solution, Verdict, verify_solution
from .io import format_graph, format_solution, parse_graph, parse_plain_graph, parse_solution
from .oracle import HARD_CAP, OracleConfig, oracle_balanced_path, oracle_bcs
from .reductions import (
    SteinerInstance,
    parse_ec3set,
    reduce_ec3set_bcs,
    reduce_ec3set_bcs_chordal,
    reduce_ec3set_existence,
    reduce_hampath_bcp,
    reduce_stpg_bcs,
)
from .split import solve_split
from .tree import solve_tree

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_UNBALANCED, EXIT_DISCONNECTED = 0, 1, 2, 3, 4

SOLVE_METHODS = ("auto", "oracle", "oracle-path", "tree", "split", "bipartite", "diam2")
REDUCTIONS = ("ec3set", "ec3set-chordal", "ec3set-exist", "stpg", "hampath")


def _read(path: str) -> bytes:
    return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_bytes(text.encode("ascii"))


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    cfg = OracleConfig(max_n=args.max_n)
    method = args.method
    if method == "auto":
        sol, method = solve_auto(g, cfg)
    elif method == "oracle":
        sol = oracle_bcs(g, cfg)
    elif method == "oracle-path":
        sol = oracle_balanced_path(g, cfg)
    elif method == "tree":
        sol = solve_tree(g, threads=args.threads)
    elif method == "split":
        sol = solve_split(g)
    elif method == "bipartite":
        sol = solve_bipartite_proper(g)
    else:
        sol = solve_diam2(g)
    verdict = verify_solution(g, sol)
    if verdict is not Verdict.OK:
        raise AssertionError(f"{method} produced a solution that fails verification: {verdict.value}")
    _write(args.out, format_solution(sol))
    print(f"method {method} size {sol.size}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    ids = parse_solution(_read(args.solution))
    verdict = verify_solution(g, ids)
    print(verdict.value)
    return {
        Verdict.OK: EXIT_OK,
        Verdict.NOT_SUBSET: EXIT_INPUT,
        Verdict.NOT_BALANCED: EXIT_UNBALANCED,
        Verdict.NOT_CONNECTED: EXIT_DISCONNECTED,
    }[verdict]


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = generate(args.cls, args.n, args.seed, args.red_frac)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(args.out, format_graph(g))
    return EXIT_OK


def cmd_detect(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    print("\n".join(classify(g).lines()))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    raw = _read(args.input)
    if args.source in ("ec3set", "ec3set-chordal", "ec3set-exist"):
        x = parse_ec3set(raw)
        reducer = {
            "ec3set": reduce_ec3set_bcs,
            "ec3set-chordal": reduce_ec3set_bcs_chordal,
            "ec3set-exist": reduce_ec3set_existence,
        }[args.source]
        out = reducer(x)
    elif args.source == "stpg":
        out = reduce_stpg_bcs(SteinerInstance.from_plain(parse_plain_graph(raw)))
    else:
        pg = parse_plain_graph(raw)
        out = reduce_hampath_bcp(pg.n, pg.edges)
    _write(args.out, format_graph(out.graph))
    if args.map:
        Path(args.map).write_text(out.to_json(), encoding="ascii")
    print(f"target_size {out.target_size}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcs", description="Balanced connected subgraph solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance and write a solution file")
    p.add_argument("--method", choices=SOLVE_METHODS, default="auto")
    p.add_argument("--in", dest="input", required=True, help="graph file ('-' for stdin)")
    p.add_argument("--out", help="solution file (default stdout)")
    p.add_argument("--max-n", type=int, default=20, help=f"oracle size cap (at most {HARD_CAP})")
    p.add_argument("--seed", type=int, default=0, help="accepted for reproducible scripting; exact methods ignore it")
    p.add_argument("--threads", type=int, default=1, help="per-root fan-out for the tree solver")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--red-frac", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("detect", help="print the graph-class report")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("reduce", help="build a BCS gadget from a source instance")
    p.add_argument("--from", dest="source", choices=REDUCTIONS, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--map", help="write the vertex-role map as JSON")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Unsupported as exc:
        print(exc, file=sys.stderr)
        if exc.report is not None:
            print("\n".join(exc.report.lines()), file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (BcsError, ValueError, OSError) as exc:
        print(exc if isinstance(exc, BcsError) else f"bcs: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
