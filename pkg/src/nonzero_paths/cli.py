"""Command-line front-end.

Every query subcommand prints one JSON document on stdout::

    {"status": "FOUND", "value": 3, "label": "1",
     "vertices": ["s", "a", "b", "t"], "edges": [0, 2, 4], ...}

Exit status is 0 for FOUND, 2 for INFEASIBLE and 1 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import gc
import json
import random
import sys
import time
from typing import Sequence

from .cycle import shortest_nonzero_cycle, shortest_nonzero_cycle_naive
from .errors import NonZeroPathError
from .fast import FastCounters, check_dual_feasibility, fast_sup
from .graph import LabeledGraph, Walk
from .groups import parse_group
from .instance import EmbeddedInstance, Instance, Query, load_instance, random_graph, render_instance
from .oracle import OracleBudget, oracle_best_cycle, oracle_best_path
from .parallel import reduce_parallel_edges
from .recursive import shortest_nonzero_path
from .reductions import homology_labeling
from .spt import INF, dijkstra

EXIT_FOUND, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _number(x: float):
    return None if x is None or x == INF else (int(x) if float(x).is_integer() else float(x))


def _load(path: str) -> tuple[LabeledGraph, tuple[Query, ...]]:
    inst = load_instance(path)
    if isinstance(inst, EmbeddedInstance):
        return homology_labeling(inst.rotation_system).graph, inst.queries
    return inst.graph, inst.queries


def _vertex(g: LabeledGraph, name: str) -> int:
    names = [g.name(v) for v in range(g.n)]
    if name not in names:
        raise NonZeroPathError(f"unknown vertex {name!r}")
    return names.index(name)


def _walk_report(g: LabeledGraph, walk: Walk | None, value) -> dict:
    if walk is None:
        return {"status": "INFEASIBLE", "value": None, "label": None, "vertices": [], "edges": []}
    return {
        "status": "FOUND",
        "value": _number(value),
        "label": g.group.render(g.walk_label(walk)),
        "vertices": [g.name(v) for v in walk.vertices],
        "edges": list(walk.edges),
    }


def _path_endpoints(g, queries, args) -> tuple[int, int, object]:
    q = next((q for q in queries if q.kind == "path"), None)
    if args.source is not None:
        s = _vertex(g, args.source)
    elif q is not None:
        s = q.source
    else:
        raise NonZeroPathError("no --source given and the file has no path query")
    if getattr(args, "target", None) is not None:
        t = _vertex(g, args.target)
    elif q is not None:
        t = q.target
    else:
        t = None
    forbidden = q.forbidden if q is not None and args.source is None else None
    if getattr(args, "forbid", None) is not None:
        forbidden = g.group.parse(args.forbid)
    return s, t, forbidden


def _emit(report: dict) -> int:
    print(json.dumps(report))
    return EXIT_FOUND if report["status"] == "FOUND" else EXIT_INFEASIBLE


def cmd_path(args) -> int:
    g, queries = _load(args.file)
    s, t, forbidden = _path_endpoints(g, queries, args)
    if t is None:
        raise NonZeroPathError("no --target given and the file has no path query")
    if args.algo == "oracle":
        best = oracle_best_path(g, s, t, forbidden, OracleBudget(max_vertices=args.oracle_max_vertices))
        report = _walk_report(g, best and best[1], best and best[0])
    else:
        res = shortest_nonzero_path(g, s, t, forbidden, algorithm=args.algo)
        report = _walk_report(g, res.path, res.length)
    report["algorithm"] = args.algo
    return _emit(report)


def cmd_cycle(args) -> int:
    g, _ = _load(args.file)
    if args.algo == "oracle":
        best = oracle_best_cycle(g, OracleBudget(max_vertices=args.oracle_max_vertices))
        report = _walk_report(g, best and best[1], best and best[0])
    elif args.algo == "naive":
        res = shortest_nonzero_cycle_naive(g)
        report = _walk_report(g, res.cycle, res.length)
    else:
        res = shortest_nonzero_cycle(g)
        report = _walk_report(g, res.cycle, res.length)
    report["algorithm"] = args.algo
    return _emit(report)


def cmd_dual(args) -> int:
    """q over the source's component, certified by the LP feasibility check.

    ``value`` is the certified non-zero s-t length: ``q(t)`` when the tree
    path to ``t`` is zero, else the tree distance itself.
    """
    g, queries = _load(args.file)
    s, t, _ = _path_endpoints(g, queries, args)
    comp = g.component(s)
    sub, _, _ = g.induced(comp)
    red, _ = reduce_parallel_edges(sub)
    tree = dijkstra(red, comp.index(s))
    dual = fast_sup(red, comp.index(s), tree)
    q = {g.name(v): None for v in range(g.n)}
    for i, v in enumerate(comp):
        q[g.name(v)] = _number(dual.q[i])
    report = {"q": q, "feasible": check_dual_feasibility(red, tree, dual), "source": g.name(s)}
    if t is not None:
        value = None
        if t in comp:
            lt = comp.index(t)
            value = dual.q[lt] if tree.psi[lt] == g.group.identity else tree.dist[lt]
        report.update(status="FOUND" if _number(value) is not None else "INFEASIBLE",
                      value=_number(value), target=g.name(t))
    else:
        report["status"] = "FOUND"
    return _emit(report)


def cmd_gen(args) -> int:
    group = parse_group(args.group)
    rng = random.Random(args.seed)
    g = random_graph(rng, args.n, args.m, group, args.maxlen, connected=args.connected)
    queries = (Query("path", 0, g.n - 1),) if g.n >= 2 else ()
    sys.stdout.write(render_instance(Instance(g, queries)))
    return EXIT_FOUND


def bench_row(n: int, m: int, group, seed: int, repeat: int) -> dict:
    """Time dijkstra and fast_sup on one random connected instance (best of ``repeat``)."""
    g = random_graph(random.Random(seed), n, m, group, maxlen=100, connected=True)
    spt_best = fast_best = INF
    # collector pauses scale with the live heap, not with the algorithm
    gc.disable()
    try:
        for _ in range(repeat):
            start = time.perf_counter()
            tree = dijkstra(g, 0)
            mid = time.perf_counter()
            fast_sup(g, 0, tree)
            end = time.perf_counter()
            spt_best = min(spt_best, mid - start)
            fast_best = min(fast_best, end - mid)
    finally:
        gc.enable()
    counters = FastCounters()
    fast_sup(g, 0, tree, counters)
    return {
        "n": n,
        "m": m,
        "seconds": f"{fast_best:.6f}",
        "spt_seconds": f"{spt_best:.6f}",
        "pops": counters.pops,
        "pushes": counters.pushes,
        "finds": counters.finds,
        "unions": counters.unions,
        "b_total": sum(counters.b_sizes),
        "b_max": max(counters.b_sizes, default=0),
        "max_b_entries_per_vertex": max(counters.b_entries.values(), default=0),
        "max_pushes_per_consistent_edge": max(counters.consistent_pushes.values(), default=0),
    }


def cmd_bench(args) -> int:
    group = parse_group(args.group)
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    writer = None
    for n in sizes:
        row = bench_row(n, args.density * n, group, args.seed, args.repeat)
        if writer is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(row), lineterminator="\n")
            writer.writeheader()
        writer.writerow(row)
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nonzero-paths", description="Shortest non-zero paths and cycles in group-labeled graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("path", help="shortest path whose label is not the forbidden one")
    sp.add_argument("file")
    sp.add_argument("--algo", choices=["fast", "recursive", "oracle"], default="fast")
    sp.add_argument("--source")
    sp.add_argument("--target")
    sp.add_argument("--forbid", metavar="LABEL", help="forbidden label (default: identity)")
    sp.add_argument("--oracle-max-vertices", type=int, default=12)
    sp.set_defaults(func=cmd_path)

    sc = sub.add_parser("cycle", help="shortest non-zero cycle (embed files: non-separating)")
    sc.add_argument("file")
    sc.add_argument("--algo", choices=["blossom", "naive", "oracle"], default="blossom")
    sc.add_argument("--oracle-max-vertices", type=int, default=12)
    sc.set_defaults(func=cmd_cycle)

    sd = sub.add_parser("dual", help="emit q for every vertex and check LP feasibility")
    sd.add_argument("file")
    sd.add_argument("--source")
    sd.add_argument("--target")
    sd.set_defaults(func=cmd_dual)

    sg = sub.add_parser("gen", help="random instance")
    sg.add_argument("--n", type=int, required=True)
    sg.add_argument("--m", type=int, required=True)
    sg.add_argument("--group", default="z2")
    sg.add_argument("--maxlen", type=int, default=10)
    sg.add_argument("--seed", type=int, default=0)
    sg.add_argument("--connected", action="store_true")
    sg.set_defaults(func=cmd_gen)

    sb = sub.add_parser("bench", help="CSV of fast solver timings and counters")
    sb.add_argument("--sizes", default="625,1250,2500,5000,10000")
    sb.add_argument("--density", type=int, default=10, help="edges per vertex")
    sb.add_argument("--group", default="z2")
    sb.add_argument("--seed", type=int, default=0)
    sb.add_argument("--repeat", type=int, default=3)
    sb.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NonZeroPathError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
