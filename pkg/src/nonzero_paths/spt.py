"""Shortest-path trees with tree labels (group-labeled Dijkstra)."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import InfeasibleError
from .graph import Edge, LabeledGraph, Walk
from .groups import GroupElement

INF = math.inf


@dataclass(frozen=True)
class ShortestPathTree:
    """An s-rooted shortest-path tree.

    Per vertex ``v``: ``dist[v]`` is the length of the tree path ``P_v``,
    ``psi[v]`` its label, ``depth[v]`` its number of edges, ``parent[v]`` the
    tree parent and ``parent_edge[v]`` the edge joining them.  Unreachable
    vertices have ``dist = inf`` and ``None`` everywhere else.
    """

    root: int
    dist: tuple[float, ...]
    psi: tuple[GroupElement | None, ...]
    depth: tuple[int | None, ...]
    parent: tuple[int | None, ...]
    parent_edge: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.dist)

    def reachable(self, v: int) -> bool:
        return self.dist[v] < INF

    def is_tree_edge(self, e: Edge) -> bool:
        return self.parent_edge[e.head] == e.id or self.parent_edge[e.tail] == e.id

    def tree_edges(self) -> set[int]:
        return {eid for eid in self.parent_edge if eid is not None}

    def ancestors(self, v: int) -> list[int]:
        """Vertices of ``P_v`` listed from ``v`` up to the root."""
        if not self.reachable(v):
            raise InfeasibleError(f"vertex {v} is unreachable from {self.root}")
        out = [v]
        while self.parent[v] is not None:
            v = self.parent[v]
            out.append(v)
        return out

    def climb(self, v: int, top: int) -> Walk:
        """Tree path from ancestor ``top`` down to ``v``, i.e. ``P_v[top, v]``."""
        verts = [v]
        edges = []
        while v != top:
            if self.parent[v] is None:
                raise InfeasibleError(f"{top} is not an ancestor of the starting vertex")
            edges.append(self.parent_edge[v])
            v = self.parent[v]
            verts.append(v)
        return Walk(tuple(reversed(verts)), tuple(reversed(edges)))

    def lca(self, u: int, v: int) -> int:
        """Deepest common vertex of ``P_u`` and ``P_v`` (ascend the deeper side)."""
        depth, parent = self.depth, self.parent
        while u != v:
            if depth[u] >= depth[v]:
                u = parent[u]
            else:
                v = parent[v]
        return u


def dijkstra(g: LabeledGraph, s: int) -> ShortestPathTree:
    """Shortest-path tree rooted at ``s`` with tree labels.

    Binary heap with lazy deletion.  Among vertices with equal tentative
    distance the smallest id is settled first, and a vertex keeps the first
    parent that achieved its final distance.
    """
    G = g.group
    n = g.n
    dist = [INF] * n
    psi: list = [None] * n
    depth: list = [None] * n
    parent: list = [None] * n
    parent_edge: list = [None] * n
    done = [False] * n
    dist[s] = 0
    psi[s] = G.identity
    depth[s] = 0
    heap = [(0, s)]
    edges = g.edges
    while heap:
        d, v = heapq.heappop(heap)
        if done[v] or d > dist[v]:
            continue
        done[v] = True
        for eid, w in g.adjacency[v]:
            if done[w]:
                continue
            nd = d + edges[eid].length
            if dist[w] > nd:
                dist[w] = nd
                psi[w] = G.op(psi[v], g.directed_label(eid, v))
                depth[w] = depth[v] + 1
                parent[w] = v
                parent_edge[w] = eid
                heapq.heappush(heap, (nd, w))
    return ShortestPathTree(s, tuple(dist), tuple(psi), tuple(depth), tuple(parent), tuple(parent_edge))


def tree_path(t: ShortestPathTree, v: int) -> Walk:
    """The root-to-``v`` tree path ``P_v``."""
    if not t.reachable(v):
        raise InfeasibleError(f"vertex {v} is unreachable from {t.root}")
    return t.climb(v, t.root)


def is_consistent(g: LabeledGraph, t: ShortestPathTree, e: Edge | int) -> bool:
    """True iff ``psi_T(tail) · label(e) == psi_T(head)``."""
    if isinstance(e, int):
        e = g.edges[e]
    if not (t.reachable(e.tail) and t.reachable(e.head)):
        raise InfeasibleError(f"edge {e.id} has an endpoint unreachable from {t.root}")
    return g.group.op(t.psi[e.tail], e.label) == t.psi[e.head]


def check_potential(g: LabeledGraph, t: ShortestPathTree) -> bool:
    """Check that ``dist_T`` is an optimal potential for the unconstrained problem.

    Feasibility: ``|p(u) - p(v)| <= len(e)`` on every edge inside the root's
    component.  Optimality: every tree edge is tight and ``p(root) == 0``, so
    ``p(v) - p(root)`` is attained by the tree path.
    """
    p = t.dist
    if p[t.root] != 0:
        return False
    for e in g.edges:
        pu, pv = p[e.tail], p[e.head]
        if pu == INF and pv == INF:
            continue
        if pu == INF or pv == INF:
            return False
        if pv > pu + e.length or pu > pv + e.length:
            return False
    for v in range(g.n):
        eid = t.parent_edge[v]
        if eid is None:
            if v != t.root and p[v] < INF:
                return False
            continue
        e = g.edges[eid]
        par = t.parent[v]
        if e.other(v) != par or p[v] != p[par] + e.length:
            return False
    return True
