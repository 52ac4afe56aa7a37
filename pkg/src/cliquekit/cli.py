"""Command-line front end: generation, enumeration, verification, bench.

Exit codes: 0 success, 1 validation error (malformed file, bad params),
2 verification or oracle failure. All randomness flows through --seed
(default 0); repeated runs with identical inputs, seed and flags produce
byte-identical output.

The empty clique is suppressed in human-facing listings by default
(--include-empty restores it, rendered as an empty line); counts always
include it.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .bounds import (
    BoundReport,
    almost_bipartite_clique_bound,
    degenerate_clique_bound,
    exact_almost_bipartite_count_bound,
    planar_clique_bound,
    verify_clique_sum_tree_bound,
    verify_family_bound,
)
from .enumeration import all_cliques, brute_force_cliques, cliques_recursive, \
    count_cliques, degenerate_cliques, measure_delay
from .generators import almost_bipartite_graph, apollonian, complete_bipartite, \
    complete_graph, k_tree, random_clique_sum_tree, random_graph
from .graph import Graph, GraphError, read_edge_list, write_edge_list
from .ordering import degeneracy_ordering

_ORACLE_CLI_LIMIT = 20


def _load_graph(path: str) -> Graph:
    if path == "-":
        return read_edge_list(sys.stdin)
    with open(path, "r", encoding="ascii") as fp:
        return read_edge_list(fp)


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="ascii", newline="\n")


def _close_output(fp: TextIO) -> None:
    if fp is not sys.stdout:
        fp.close()


def _build_family(family: str, params: list[str], seed: int) -> Graph:
    def want(k: int) -> list[str]:
        if len(params) != k:
            raise GraphError(f"family {family!r} takes {k} parameter(s), got {len(params)}")
        return params

    if family == "complete":
        (n,) = map(int, want(1))
        return complete_graph(n)
    if family == "complete-bipartite":
        a, b = map(int, want(2))
        return complete_bipartite(a, b)
    if family == "k-tree":
        k, n = map(int, want(2))
        return k_tree(k, n, seed)
    if family == "apollonian":
        (n,) = map(int, want(1))
        return apollonian(n, seed)
    if family == "almost-bipartite":
        a, b, h, p = want(4)
        return almost_bipartite_graph(int(a), int(b), int(h), float(p), seed)
    if family == "random":
        n, p = want(2)
        return random_graph(int(n), float(p), seed)
    raise GraphError(f"unknown family {family!r}")


def _verify_reports(family: str, params: list[str], seed: int) -> list[BoundReport]:
    if family == "complete":
        g = _build_family(family, params, seed)
        return [verify_family_bound(g, 1 << g.n, "complete", {"n": g.n})]
    if family in ("complete-bipartite", "almost-bipartite"):
        g = _build_family(family, params, seed)
        h = int(params[2]) if family == "almost-bipartite" else 0
        return [
            verify_family_bound(g, almost_bipartite_clique_bound(h, g.n),
                                family, {"h": h}),
            verify_family_bound(g, exact_almost_bipartite_count_bound(h, g.n),
                                family + "-sharp", {"h": h}),
        ]
    if family == "k-tree":
        g = _build_family(family, params, seed)
        k = int(params[0])
        return [verify_family_bound(g, degenerate_clique_bound(k, g.n),
                                    "k-tree", {"k": k})]
    if family == "apollonian":
        g = _build_family(family, params, seed)
        return [verify_family_bound(g, planar_clique_bound(g.n), "apollonian")]
    if family == "random":
        g = _build_family(family, params, seed)
        d = degeneracy_ordering(g).degeneracy
        return [verify_family_bound(g, degenerate_clique_bound(d, g.n),
                                    "random", {"d": d})]
    if family == "clique-sum-tree":
        if len(params) != 1:
            raise GraphError("family 'clique-sum-tree' takes 1 parameter (leaf count)")
        tree = random_clique_sum_tree(int(params[0]), seed=seed)
        return [verify_clique_sum_tree_bound(tree, k=3, f_k=2)]
    raise GraphError(f"unknown family {family!r}")


def _render_bound(b) -> str:
    if isinstance(b, Fraction) and b.denominator == 1:
        return str(b.numerator)
    return str(b)


def _emit_reports(reports: list[BoundReport], fp: TextIO, as_json: bool) -> None:
    for r in reports:
        if as_json:
            record = {
                "label": r.family,
                "n": r.n,
                "bound": r.bound if isinstance(r.bound, int) else str(r.bound),
                "actual": r.actual,
                "holds": r.holds,
                "tight": r.tight,
            }
            fp.write(json.dumps(record, separators=(", ", ": ")) + "\n")
        else:
            fields = (r.family, str(r.n), _render_bound(r.bound), str(r.actual),
                      "true" if r.holds else "false", "true" if r.tight else "false")
            fp.write("\t".join(fields) + "\n")


def cmd_generate(args: argparse.Namespace) -> int:
    g = _build_family(args.family, args.params, args.seed)
    fp = _open_output(args.output)
    try:
        write_edge_list(g, fp)
    finally:
        _close_output(fp)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    fp = _open_output(args.output)
    try:
        def sink(t: tuple) -> None:
            if t or args.include_empty:
                fp.write(" ".join(map(str, t)) + "\n")

        all_cliques(g, sink=sink)
    finally:
        _close_output(fp)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    fp = _open_output(args.output)
    try:
        fp.write(f"{count_cliques(g)}\n")
    finally:
        _close_output(fp)
    return 0


def cmd_degeneracy(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    ordering = degeneracy_ordering(g)
    fp = _open_output(args.output)
    try:
        fp.write(f"{ordering.degeneracy}\n")
        if args.ordering_dump:
            fp.write(" ".join(map(str, ordering.order)) + "\n")
    finally:
        _close_output(fp)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = _verify_reports(args.family, args.params, args.seed)
    fp = _open_output(args.output)
    try:
        _emit_reports(reports, fp, args.json)
    finally:
        _close_output(fp)
    return 0 if all(r.holds for r in reports) else 2


def cmd_bench(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    stats = measure_delay(g, max_cliques=args.max_cliques)
    ratio = stats.max_gap / stats.n if stats.n else 0.0
    fp = _open_output(args.output)
    try:
        fp.write("n\tclique_count\ttotal_steps\tmax_gap\tmax_gap/n\n")
        fp.write(f"{stats.n}\t{stats.clique_count}\t{stats.total_steps}\t"
                 f"{stats.max_gap}\t{ratio:.4f}\n")
    finally:
        _close_output(fp)
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    if g.n > _ORACLE_CLI_LIMIT:
        raise GraphError(f"oracle-check is limited to n <= {_ORACLE_CLI_LIMIT}, got {g.n}")
    reference = brute_force_cliques(g)
    results = {"cliques_recursive": cliques_recursive(g)}
    streamed: set = set()
    all_cliques(g, sink=streamed.add)
    results["all_cliques"] = streamed
    degen: set = set()
    degenerate_cliques(g, sink=degen.add)
    results["degenerate_cliques"] = degen

    divergent: set = set()
    bad: list[str] = []
    for name, got in results.items():
        if got != reference:
            bad.append(name)
            divergent |= got ^ reference
    if not bad:
        print("PASS")
        return 0
    first = min(sorted(divergent), key=lambda t: (len(t), t))
    rendered = " ".join(map(str, first)) if first else "(empty)"
    print(f"FAIL {', '.join(sorted(bad))} diverge from brute force; "
          f"first divergent clique: {rendered}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquekit",
        description="Clique enumeration, graph family generation, and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated family as an edge list")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="stream all cliques of an edge-list graph")
    p.add_argument("input", help="edge-list path, or - for stdin")
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="print the exact clique count (includes the empty clique)")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("degeneracy", help="print the degeneracy (and ordering with --ordering-dump)")
    p.add_argument("input")
    p.add_argument("--ordering-dump", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("verify", help="check a family's clique-count bound against enumeration")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="print delay statistics for one enumeration run")
    p.add_argument("input")
    p.add_argument("--max-cliques", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle-check", help="four-way equivalence check on a small graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
