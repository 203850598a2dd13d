"""Dual-value solver: shortest unorthodox distances to every vertex at once.

Blossoms are never built explicitly.  A disjoint-set forest tracks which
tree vertices have already been absorbed; each forest component is a subtree
of the shortest-path tree rooted at its shallowest vertex, so walking the two
tree paths of a popped edge only touches component roots.
"""

from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass, field

from .errors import InfeasibleError
from .graph import LabeledGraph, Walk, concat
from .spt import INF, ShortestPathTree, tree_path


@dataclass
class FastCounters:
    """Opt-in instrumentation for :func:`fast_sup`."""

    pops: int = 0
    pushes: int = 0
    finds: int = 0
    unions: int = 0
    b_sizes: list[int] = field(default_factory=list)
    b_entries: dict[int, int] = field(default_factory=dict)  # vertex -> times added to B
    consistent_pushes: dict[int, int] = field(default_factory=dict)  # edge id -> times queued
    popped_h: list[float] = field(default_factory=list)
    forest_parent: list[int] = field(default_factory=list)  # final union-find parents


class DisjointSetForest:
    """Union-find with path compression only.

    No union by rank: the new parent of a merged root is dictated by the
    caller (the shallower tree vertex), which keeps every component rooted at
    its minimum-depth member.
    """

    def __init__(self, n: int):
        self.parent = array("q", range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def attach(self, child_root: int, new_parent: int) -> None:
        self.parent[child_root] = new_parent

    def is_root(self, x: int) -> bool:
        return self.parent[x] == x


@dataclass(frozen=True)
class Provenance:
    """How ``q(w)`` was set: by edge ``edge`` popped as ``a -> c``.

    For an inconsistent edge the orientation is arbitrary.  For a consistent
    edge ``a`` is the endpoint whose dual value priced the edge.  ``on_a_side``
    tells whether ``w`` lies on ``P_a`` (rather than on ``P_c``).
    """

    edge: int
    a: int
    c: int
    consistent: bool
    on_a_side: bool


@dataclass(frozen=True)
class DualSolution:
    q: tuple[float, ...]
    provenance: tuple[Provenance | None, ...]
    root: int

    def value(self, w: int) -> float:
        return self.q[w]


def fast_sup(
    g: LabeledGraph,
    s: int,
    tree: ShortestPathTree,
    counters: FastCounters | None = None,
) -> DualSolution:
    """Optimal dual ``q``: ``q[w]`` is the shortest unorthodox s-w length (inf if none).

    Queue entries order by ``(priority, edge id, direction)``; the edge is
    popped as ``a -> c`` with ``a`` its stored tail when ``direction`` is 0,
    so ties resolve deterministically.  With integer lengths the triple is
    packed into one int, which orders the same way and keeps the heap small.
    """
    n = g.n
    op = g.group.op
    dist, psi = tree.dist, tree.psi
    # flat machine-int copies keep the per-pop lookups cache friendly
    depth = array("q", (-1 if x is None else x for x in tree.depth))
    tparent = array("q", (-1 if x is None else x for x in tree.parent))
    edges = g.edges
    q = [INF] * n
    prov: list = [None] * n
    forest = DisjointSetForest(n)
    find = forest.find
    ends = (array("q", (e.tail for e in edges)), array("q", (e.head for e in edges)))

    consistent = [False] * len(edges)
    # consistent edges around each vertex: (edge id, other end, length, direction)
    cons_adj: list[list] = [[] for _ in range(n)]
    # Inconsistent edges enter the queue once, up front, with fixed
    # priorities, so they live in a sorted list; only the consistent edges
    # pushed later go through the heap.  Popping the smaller head of the two
    # yields exactly the order of a single priority queue.
    packed = all(type(e.length) is int for e in edges) and all(type(x) is int for x in dist if x != INF)
    shift = (2 * len(edges)).bit_length()
    low = (1 << shift) - 1
    initial: list = []
    for e in edges:
        u, v = e.tail, e.head
        if dist[u] == INF or dist[v] == INF:
            continue
        if op(psi[u], e.label) == psi[v]:
            consistent[e.id] = True
            cons_adj[u].append((e.id, v, e.length, 0))
            cons_adj[v].append((e.id, u, e.length, 1))
        else:
            h = dist[u] + dist[v] + e.length
            initial.append((h << shift) | (e.id << 1) if packed else (h, e.id, 0))
    initial.sort()
    if counters is not None:
        counters.pushes += len(initial)
    heap: list = []
    pos, n_initial = 0, len(initial)

    while heap or pos < n_initial:
        if pos < n_initial and (not heap or initial[pos] < heap[0]):
            key = initial[pos]
            pos += 1
        else:
            key = heapq.heappop(heap)
        if packed:
            h, eid, d = key >> shift, (key & low) >> 1, key & 1
        else:
            h, eid, d = key
        a, c = ends[d][eid], ends[1 - d][eid]
        w1, w2 = find(a), find(c)
        if counters is not None:
            counters.pops += 1
            counters.finds += 2
            counters.popped_h.append(h)
        b_set: list[tuple[int, bool]] = []
        while w1 != w2:
            if depth[w1] >= depth[w2]:
                b_set.append((w1, True))
                w1 = find(tparent[w1])
            else:
                b_set.append((w2, False))
                w2 = find(tparent[w2])
            if counters is not None:
                counters.finds += 1
        if counters is not None:
            counters.b_sizes.append(len(b_set))
        if not b_set:
            continue
        is_cons = consistent[eid]
        for w, on_a in b_set:
            forest.attach(w, w1)
            qw = q[w] = h - dist[w]
            prov[w] = Provenance(eid, a, c, is_cons, on_a)
            if counters is not None:
                counters.unions += 1
                counters.b_entries[w] = counters.b_entries.get(w, 0) + 1
            for fid, x, length, fd in cons_adj[w]:
                h2 = qw + dist[x] + length
                heapq.heappush(heap, (h2 << shift) | (fid << 1) | fd if packed else (h2, fid, fd))
                if counters is not None:
                    counters.pushes += 1
                    counters.consistent_pushes[fid] = counters.consistent_pushes.get(fid, 0) + 1
    if counters is not None:
        counters.forest_parent = list(forest.parent)
    return DualSolution(tuple(q), tuple(prov), s)


def reconstruct_path(g: LabeledGraph, tree: ShortestPathTree, dual: DualSolution, w: int) -> Walk:
    """An unorthodox s-w path of length ``q[w]``, rebuilt from provenance records."""
    if dual.q[w] == INF:
        raise InfeasibleError(f"no unorthodox path from {dual.root} to {w}")
    # each record depends on at most one earlier record (the priced endpoint)
    chain = [w]
    while True:
        p = dual.provenance[chain[-1]]
        if not p.consistent:
            break
        chain.append(p.a)
    built: Walk | None = None
    for x in reversed(chain):
        p = dual.provenance[x]
        if not p.consistent:
            if p.on_a_side:
                built = concat(tree_path(tree, p.c), g.edge_walk(p.edge, p.c), tree.climb(p.a, x).reverse())
            else:
                built = concat(tree_path(tree, p.a), g.edge_walk(p.edge, p.a), tree.climb(p.c, x).reverse())
            continue
        q_a = built
        if not p.on_a_side:
            built = concat(q_a, g.edge_walk(p.edge, p.a), tree.climb(p.c, x).reverse())
        else:
            tail = q_a.subwalk(q_a.position(x), len(q_a)).reverse()
            built = concat(tree_path(tree, p.c), g.edge_walk(p.edge, p.c), tail)
    return built


def _symmetric_difference(tree: ShortestPathTree, u: int, v: int) -> list[int]:
    top = tree.lca(u, v)
    out = []
    for x in (u, v):
        while x != top:
            out.append(x)
            x = tree.parent[x]
    return out


def check_dual_feasibility(g: LabeledGraph, tree: ShortestPathTree, q) -> bool:
    """Check every finite ``q(w)`` against both constraint families.

    Inconsistent ``{u, v}``: ``q(w) + d(w) <= d(u) + d(v) + len`` for ``w`` in
    the symmetric difference of ``V(P_u)`` and ``V(P_v)``.  Consistent edges
    give the two oriented constraints ``q(w) + d(w) <= q(u) + d(v) + len``,
    vacuous when ``q(u)`` is infinite.
    """
    if isinstance(q, DualSolution):
        q = q.q
    op = g.group.op
    dist, psi = tree.dist, tree.psi
    for e in g.edges:
        u, v = e.tail, e.head
        if dist[u] == INF or dist[v] == INF:
            continue
        sym = [w for w in _symmetric_difference(tree, u, v) if q[w] != INF]
        if not sym:
            continue
        worst = max(q[w] + dist[w] for w in sym)
        if op(psi[u], e.label) != psi[v]:
            if worst > dist[u] + dist[v] + e.length:
                return False
        else:
            if worst > q[u] + dist[v] + e.length or worst > q[v] + dist[u] + e.length:
                return False
    return True
