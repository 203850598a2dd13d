"""The recursive blossom-shrinking solver and the top-level path driver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .blossom import detour_path, expand, find_lowest_blossom, shrink, simplify
from .errors import UsageError
from .fast import fast_sup, reconstruct_path
from .graph import Edge, LabeledGraph, Walk, map_walk
from .groups import GroupElement
from .parallel import reduce_parallel_edges
from .spt import INF, ShortestPathTree, dijkstra, tree_path

Algorithm = Literal["fast", "recursive"]


@dataclass
class SolverStats:
    """Per-query instrumentation for the recursive solver."""

    edge_counts: list[int] = field(default_factory=list)  # |E| at each recursion level
    vertex_counts: list[int] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.edge_counts)


@dataclass(frozen=True)
class PathResult:
    """Answer to a path query.  ``path`` is None when the query is infeasible."""

    path: Walk | None
    length: float | None = None
    label: GroupElement | None = None
    algorithm: str = ""
    stats: object = None

    @property
    def found(self) -> bool:
        return self.path is not None

    @property
    def status(self) -> str:
        return "FOUND" if self.found else "INFEASIBLE"


def _require_spanning(t: ShortestPathTree) -> None:
    if any(d == INF for d in t.dist):
        raise UsageError("the recursive solver needs a connected graph; restrict to the source component first")


def sup_recursive(
    g: LabeledGraph,
    s: int,
    t: int,
    tree: ShortestPathTree,
    stats: SolverStats | None = None,
    check: bool = False,
) -> Walk | None:
    """Shortest unorthodox s-t path with respect to ``tree``, or None.

    Shrinks a lowest blossom per level until either ``t`` lies on the blossom
    (the detour around it is optimal) or no inconsistent edge is left (no
    unorthodox path exists), then expands and simplifies back up the levels.
    With ``check=True`` every shrunk tree is re-verified against Dijkstra.
    """
    if s == t:
        raise UsageError("source and target must differ")
    if tree.root != s:
        raise UsageError("tree must be rooted at the source")
    _require_spanning(tree)

    levels = []
    cur_g, cur_t, cur_target = g, tree, t
    while True:
        if stats is not None:
            stats.edge_counts.append(cur_g.m)
            stats.vertex_counts.append(cur_g.n)
        bl = find_lowest_blossom(cur_g, cur_t)
        if bl is None:
            return None
        if cur_target in bl.members:
            path = detour_path(cur_g, cur_t, bl, cur_target)
            break
        sr = shrink(cur_g, cur_t, bl)
        if check:
            fresh = dijkstra(sr.graph, sr.tree.root)
            if fresh.dist != sr.tree.dist:
                raise AssertionError("shrunk tree is not a shortest-path tree")
        levels.append((sr, cur_target))
        cur_g, cur_t, cur_target = sr.graph, sr.tree, sr.old_to_new[cur_target]

    for sr, target in reversed(levels):
        walk = expand(sr, path)
        path = simplify(sr.source, sr.source_tree, sr.blossom, walk, target)
    return path


def _gadget(g: LabeledGraph, t: int, forbidden: GroupElement) -> LabeledGraph:
    """Append a pendant vertex t' and a zero-length edge t -> t' labeled forbidden^-1."""
    G = g.group
    edge = Edge(g.m, t, g.n, G.inverse(forbidden), 0)
    names = g.names + (g.name(t) + "'",) if g.names is not None else None
    return LabeledGraph(g.n + 1, g.edges + (edge,), G, names)


def shortest_nonzero_path(
    g: LabeledGraph,
    s: int,
    t: int,
    forbidden: GroupElement | None = None,
    algorithm: Algorithm = "fast",
    stats=None,
) -> PathResult:
    """Shortest s-t path whose label differs from ``forbidden`` (default: identity).

    The graph is first restricted to the component of ``s`` and stripped of
    redundant parallel edges.  If the tree path to ``t`` already qualifies it
    is returned, otherwise the unorthodox-path solver selected by
    ``algorithm`` takes over.  The witness is reported in ``g``'s ids.
    """
    G = g.group
    if s == t:
        raise UsageError("source and target must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise UsageError("source or target is not a vertex of the graph")
    if algorithm not in ("fast", "recursive"):
        raise UsageError(f"unknown algorithm {algorithm!r}")

    if forbidden is not None and not G.contains(forbidden):
        raise UsageError(f"forbidden label {forbidden!r} is not an element of {G.spec()}")
    if forbidden is not None and forbidden != G.identity:
        h = _gadget(g, t, forbidden)
        res = shortest_nonzero_path(h, s, h.n - 1, None, algorithm, stats)
        if not res.found:
            return PathResult(None, algorithm=algorithm, stats=res.stats)
        p = res.path
        path = Walk(p.vertices[:-1], p.edges[:-1])
        return PathResult(path, g.walk_length(path), g.walk_label(path), algorithm, res.stats)

    comp = g.component(s)
    if t not in comp:
        return PathResult(None, algorithm=algorithm, stats=stats)
    sub, vmap, emap = g.induced(comp)
    red, red_emap = reduce_parallel_edges(sub)
    emap = [emap[i] for i in red_emap]
    ls, lt = comp.index(s), comp.index(t)

    tree = dijkstra(red, ls)
    if tree.psi[lt] != G.identity:
        local = tree_path(tree, lt)
    elif algorithm == "recursive":
        if stats is None:
            stats = SolverStats()
        local = sup_recursive(red, ls, lt, tree, stats)
    else:
        dual = fast_sup(red, ls, tree, stats)
        local = reconstruct_path(red, tree, dual, lt) if dual.q[lt] < INF else None
    if local is None:
        return PathResult(None, algorithm=algorithm, stats=stats)
    path = map_walk(local, vmap, emap)
    return PathResult(path, g.walk_length(path), g.walk_label(path), algorithm, stats)
