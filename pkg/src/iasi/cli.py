"""Command-line front end.

Subcommands: verify, construct, search, reduce, analyze.  Results go to
stdout as JSON; diagnostics go to stderr.  Exit codes: 0 when the command
ran (including "no" answers such as exhausted-none or is_strong=false),
1 for operational errors (bad files, violated preconditions), 2 for usage
errors.  Every command is deterministic: no seeds, byte-identical output
for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .construct import (
    ConstructionError,
    ConstructionParams,
    FactorPair,
    ReductionError,
    construct_bipartite_strong,
    construct_complete_strong,
    construct_weak_uniform,
    topological_reduce,
)
from .graphs import GraphFormatError, Graph, bipartition_of, parse_edge_list
from .search import SearchSpec, brute_force_search
from .verify import (
    Labeling,
    LabelingError,
    analyze_divisor_partition,
    verify,
)

MAX_K = 2**31 - 1


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _read_labels(path: str) -> Labeling:
    with open(path, "r", encoding="utf-8") as fh:
        return Labeling.from_json(fh.read())


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _check_k(k: int) -> int:
    if not (1 <= k <= MAX_K):
        raise ConstructionError(f"k must be in 1..{MAX_K}")
    return k


def _parse_factors(text: str) -> FactorPair:
    parts = text.split(",")
    if len(parts) != 2:
        raise ConstructionError("--factors expects m,n")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ConstructionError("--factors expects two integers") from None
    return FactorPair(m, n)


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    f = _read_labels(args.labels)
    report = verify(g, f)
    _emit(report.as_dict(), args.out)
    return 0


def cmd_construct(args) -> int:
    if args.mode == "complete":
        if args.vertices is None or args.l is None:
            raise ConstructionError("complete mode needs --vertices and --l")
        f = construct_complete_strong(args.vertices, args.l)
        _emit(json.loads(f.to_json()), args.out)
        return 0
    if args.graph is None or args.k is None:
        raise ConstructionError(f"{args.mode} mode needs --graph and --k")
    g = _read_graph(args.graph)
    bp = bipartition_of(g)
    if bp is None:
        raise ConstructionError("graph is not bipartite")
    k = _check_k(args.k)
    if args.mode == "strong":
        factors = _parse_factors(args.factors) if args.factors else None
        f = construct_bipartite_strong(g, bp, ConstructionParams(k, factors))
    else:
        f = construct_weak_uniform(g, bp, k)
    _emit(json.loads(f.to_json()), args.out)
    return 0


def cmd_search(args) -> int:
    g = _read_graph(args.graph)
    k = None if args.target == "any-strong" else _check_k(args.k) if args.k else None
    spec = SearchSpec(
        universe_max=args.universe,
        max_label_size=args.max_size,
        target=args.target,
        k=k,
        node_budget=args.budget,
    )
    outcome = brute_force_search(g, spec)
    payload = outcome.as_dict()
    if outcome.status == "exhausted-none":
        print(
            f"no labeling within universe {{0..{args.universe}}}; "
            "nonexistence is certified only up to this bound",
            file=sys.stderr,
        )
    _emit(payload, args.out)
    return 0


def cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    f = _read_labels(args.labels)
    reduced, labels = topological_reduce(g, f, args.vertex)
    payload = {
        "vertex_count": reduced.vertex_count,
        "edges": [[u, v] for u, v in reduced.edges],
        "labels": json.loads(labels.to_json()),
    }
    _emit(payload, args.out)
    return 0


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    f = _read_labels(args.labels)
    report = analyze_divisor_partition(g, f, _check_k(args.k))
    _emit(report.as_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Construct, verify, analyze, and search integer additive set-indexers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify a labeled graph")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--labels", required=True, help="labeling JSON file")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a labeling with a guaranteed classification")
    p.add_argument("--graph", help="edge-list file (strong/weak modes)")
    p.add_argument("--k", type=int, help="target edge label size")
    p.add_argument("--factors", help="m,n with m*n = k (strong mode)")
    p.add_argument("--mode", choices=["strong", "weak", "complete"], default="strong")
    p.add_argument("--vertices", type=int, help="number of vertices (complete mode)")
    p.add_argument("--l", type=int, help="vertex label size (complete mode)")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive search over a bounded universe")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--target", choices=["strong", "weak", "any-strong"], required=True)
    p.add_argument("--k", type=int, help="edge label size for uniform targets")
    p.add_argument("--universe", type=int, required=True, help="labels drawn from {0..universe}")
    p.add_argument("--max-size", type=int, default=None, help="largest label size (default: universe+1)")
    p.add_argument("--budget", type=int, default=10_000_000, help="search-tree node cap")
    p.add_argument("--threads", type=int, default=1, help="worker cap (outcome is thread-count independent)")
    p.set_defaults(func=cmd_search, out=None)

    p = sub.add_parser("reduce", help="remove a degree-2 vertex, joining its neighbors")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--labels", required=True, help="labeling JSON file (must be strong)")
    p.add_argument("--vertex", type=int, required=True, help="degree-2 vertex to remove")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("analyze", help="divisor-class component structure of a strongly k-uniform labeling")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--labels", required=True, help="labeling JSON file")
    p.add_argument("--k", type=int, required=True, help="the uniform edge label size")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "search" and args.max_size is None:
        args.max_size = args.universe + 1
    try:
        return args.func(args)
    except (
        OSError,
        GraphFormatError,
        LabelingError,
        ConstructionError,
        ReductionError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
