"""Command line front end: ``compute``, ``gen`` and ``verify``.

Exit codes: 0 success, 1 failed verify checks, 2 unreadable input or bad
parameters, 3 graph disconnected or too small.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families as F
from .errors import BadParameter, Disconnected, ParseError, TooSmall
from .graph import read_edge_list, write_edge_list
from .lp import edge_lp, format_lp, solve_covering_lp, vertex_lp
from .search import dim, edim
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GRAPH = 0, 1, 2, 3


def _fail(code, msg):
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_compute(args) -> int:
    try:
        g = read_edge_list(args.input)
    except (OSError, ParseError) as exc:
        return _fail(EXIT_INPUT, exc)
    try:
        if args.what in ("dim", "edim"):
            res = (dim if args.what == "dim" else edim)(g, node_budget=args.node_budget)
            print(res.size)
            print("{" + ", ".join(map(str, res.witness)) + "}")
            if not res.optimal:
                print("# node budget exhausted: not proven optimal")
            return EXIT_OK
        lp = vertex_lp(g) if args.what == "dimf" else edge_lp(g)
        if args.dump_lp:
            Path(args.dump_lp).write_text(format_lp(lp), encoding="utf-8")
        sol = solve_covering_lp(lp)
        value, weights = sol.value, sol.weights
    except (Disconnected, TooSmall) as exc:
        return _fail(EXIT_GRAPH, exc)
    print(value)
    for v, w in enumerate(weights):
        if w:
            print(f"{v}={w}")
    return EXIT_OK


def _write(lg, stem: str) -> list[str]:
    edges, names = f"{stem}.edges", f"{stem}.names"
    write_edge_list(lg.graph, edges)
    Path(names).write_text(lg.format_names(), encoding="utf-8")
    return [edges, names]


def _need(value, flag):
    if value is None:
        raise BadParameter(f"--{flag} is required for this family")
    return value


def cmd_gen(args) -> int:
    fam = args.family
    stem = args.output or fam
    try:
        if fam == "path":
            outs = {"": F.path(_need(args.n, "n"))}
        elif fam == "cycle":
            outs = {"": F.cycle(_need(args.n, "n"))}
        elif fam == "complete":
            outs = {"": F.complete(_need(args.n, "n"))}
        elif fam == "star":
            outs = {"": F.star(_need(args.n, "n"))}
        elif fam == "wheel":
            outs = {"": F.wheel(_need(args.n, "n"))}
        elif fam == "multipartite":
            parts = [int(x) for x in _need(args.parts, "parts").split(",")]
            outs = {"": F.multipartite(*parts)}
        elif fam == "petersen":
            outs = {"": F.petersen()}
        elif fam == "grid":
            outs = {"": F.grid(_need(args.s, "s"), _need(args.t, "t"))}
        elif fam == "random-tree":
            outs = {"": F.random_tree(_need(args.n, "n"), args.seed)}
        elif fam == "nonplanar-edim2":
            outs = {"": F.nonplanar_edim2()}
        elif fam == "same-codes":
            h1, h2, _ = F.same_codes_pair()
            outs = {"_H1": h1, "_H2": h2}
        elif fam == "subgraph-edim":
            g, h, _ = F.subgraph_edim_pair()
            outs = {"_G": g, "_H": F.induced_subgraph(g, h)}
        elif fam == "twin-ladder":
            g, h = F.twin_ladder_pair(_need(args.k, "k"))
            outs = {"_G": g, "_H": F.induced_subgraph(g, h)}
        elif fam == "broadcast":
            g, h = F.broadcast_pair(_need(args.m, "m"))
            outs = {"_G": g, "_H": F.induced_subgraph(g, h)}
        elif fam == "clique-subsets":
            outs = {"": F.clique_subsets_graph(_need(args.k, "k"))}
        else:  # argparse restricts choices
            raise BadParameter(f"unknown family {fam}")
    except (BadParameter, ValueError) as exc:
        return _fail(EXIT_INPUT, exc)
    for suffix, lg in outs.items():
        for path in _write(lg, stem + suffix):
            print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_checks(args.filter)
    sys.stdout.write(report.format(timings=args.timings))
    return EXIT_OK if report.passed else EXIT_FAIL


FAMILIES = ["path", "cycle", "complete", "star", "wheel", "multipartite", "petersen", "grid",
            "random-tree", "nonplanar-edim2", "same-codes", "subgraph-edim", "twin-ladder",
            "broadcast", "clique-subsets"]


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgedim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute dim, edim, dim_f or edim_f of an edge-list file")
    p.add_argument("input")
    p.add_argument("--what", choices=["dim", "edim", "dimf", "edimf"], required=True)
    p.add_argument("--dump-lp", metavar="PATH", help="write the reduced LP rows (dimf/edimf only)")
    p.add_argument("--node-budget", type=int, default=10 ** 7)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="write a family member as <stem>.edges + <stem>.names")
    p.add_argument("--family", choices=FAMILIES, required=True)
    for flag in ("n", "s", "t", "k", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--parts", help="comma-separated part sizes for multipartite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="STEM", help="output path stem (default: family name)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="rerun the reproduction checks")
    p.add_argument("--filter", help="only run checks whose name contains this substring")
    p.add_argument("--timings", action="store_true", help="append elapsed seconds (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
