"""Lowest blossoms and the shrink / expand / simplify operations.

For an inconsistent non-tree edge ``e = {u, v}`` the closed walk
``W_e = P_u * (u, e, v) * reverse(P_v)`` splits into a stem (the tree path to
the base ``b``, the deepest common vertex of ``P_u`` and ``P_v``) and a cycle
through ``b``.  The blossom is that cycle; its height is half of ``len(W_e)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import StructuralError, UsageError
from .graph import Edge, LabeledGraph, Walk, concat
from .groups import GroupElement
from .parallel import retain_parallel
from .spt import INF, ShortestPathTree, tree_path


@dataclass(frozen=True)
class Blossom:
    edge: int
    u: int  # W_e runs P_u, then e from u to v, then P_v backwards
    v: int
    base: int
    cycle: Walk
    height: float
    closed_label: GroupElement  # label of W_e
    closed_length: float  # length of W_e, twice the height
    u_side: frozenset[int]  # V(P_u) minus V(P_v)
    v_side: frozenset[int]  # V(P_v) minus V(P_u)

    @property
    def members(self) -> frozenset[int]:
        """Cycle vertices other than the base; these disappear on shrinking."""
        return self.u_side | self.v_side


def make_blossom(g: LabeledGraph, t: ShortestPathTree, eid: int) -> Blossom:
    """Blossom of an inconsistent non-tree edge ``eid`` (oriented tail to head)."""
    e = g.edges[eid]
    u, v = e.tail, e.head
    G = g.group
    b = t.lca(u, v)
    up_u = t.climb(u, b)
    up_v = t.climb(v, b)
    cycle = concat(up_u, g.edge_walk(eid, u), up_v.reverse())
    closed_label = G.op(G.op(t.psi[u], e.label), G.inverse(t.psi[v]))
    return Blossom(
        edge=eid,
        u=u,
        v=v,
        base=b,
        cycle=cycle,
        height=(t.dist[u] + t.dist[v] + e.length) / 2,
        closed_label=closed_label,
        closed_length=t.dist[u] + t.dist[v] + e.length,
        u_side=frozenset(up_u.vertices[1:]),
        v_side=frozenset(up_v.vertices[1:]),
    )


def inconsistent_edges(g: LabeledGraph, t: ShortestPathTree):
    """Yield the non-tree edges with both ends reachable that are inconsistent."""
    op, psi, dist = g.group.op, t.psi, t.dist
    for e in g.edges:
        if dist[e.tail] == INF or dist[e.head] == INF or t.is_tree_edge(e):
            continue
        if op(psi[e.tail], e.label) != psi[e.head]:
            yield e


def find_lowest_blossom(g: LabeledGraph, t: ShortestPathTree) -> Blossom | None:
    """A blossom of minimum height (ties: smallest edge id), or None."""
    best = None
    for e in inconsistent_edges(g, t):
        key = (t.dist[e.tail] + t.dist[e.head] + e.length, e.id)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return make_blossom(g, t, best[1])


def detour_path(g: LabeledGraph, t: ShortestPathTree, bl: Blossom, w: int) -> Walk:
    """The s-w path ``Q_w`` that uses only tree edges and the blossom edge."""
    if w in bl.v_side:
        return concat(tree_path(t, bl.u), g.edge_walk(bl.edge, bl.u), t.climb(bl.v, w).reverse())
    if w in bl.u_side:
        return concat(tree_path(t, bl.v), g.edge_walk(bl.edge, bl.v), t.climb(bl.u, w).reverse())
    raise UsageError(f"vertex {w} is not a non-base vertex of the blossom on edge {bl.edge}")


def detour_label(g: LabeledGraph, t: ShortestPathTree, bl: Blossom, w: int) -> GroupElement:
    """Closed-form label of ``Q_w``."""
    G = g.group
    if w in bl.v_side:
        return G.op(bl.closed_label, t.psi[w])
    if w in bl.u_side:
        return G.op(G.inverse(bl.closed_label), t.psi[w])
    raise UsageError(f"vertex {w} is not a non-base vertex of the blossom on edge {bl.edge}")


def detour_length(t: ShortestPathTree, bl: Blossom, w: int) -> float:
    return bl.closed_length - t.dist[w]


@dataclass(frozen=True)
class ShrinkResult:
    """Outcome of shrinking a lowest blossom into its base.

    ``origin[i]`` describes edge ``i`` of the shrunk graph as
    ``(old_edge_id, branch)`` with ``branch == 0`` for an edge copied as is,
    and ``1`` / ``2`` for the two replacement edges of a removed edge (routed
    along the tree side or the detour side of the blossom, respectively).
    """

    source: LabeledGraph
    source_tree: ShortestPathTree
    blossom: Blossom
    graph: LabeledGraph
    tree: ShortestPathTree
    vertex_map: tuple[int, ...]  # shrunk id -> source id
    old_to_new: dict[int, int]
    origin: tuple[tuple[int, int], ...]
    _routes: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def removed(self) -> frozenset[int]:
        return self.blossom.members

    @property
    def new_edge_ids(self) -> list[int]:
        return [i for i, (_, branch) in enumerate(self.origin) if branch]

    def route(self, w: int, branch: int) -> Walk:
        """``R^branch_{b,w}``: the tree path (1) or the detour (2) from base to ``w``."""
        key = (w, branch)
        if key not in self._routes:
            g, t, bl = self.source, self.source_tree, self.blossom
            if branch == 1:
                walk = t.climb(w, bl.base)
            else:
                q = detour_path(g, t, bl, w)
                walk = q.subwalk(q.position(bl.base), len(q))
            self._routes[key] = walk
        return self._routes[key]


def _rebuild_depth(n: int, root: int, parent: list) -> list:
    children: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p is not None:
            children[p].append(v)
    depth: list = [None] * n
    depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for c in children[v]:
            depth[c] = depth[v] + 1
            queue.append(c)
    return depth


def shrink(g: LabeledGraph, t: ShortestPathTree, bl: Blossom) -> ShrinkResult:
    """Shrink the (lowest) blossom ``bl`` into its base.

    Every removed edge ``f = {w, x}`` with ``w`` on the blossom (not the base)
    and ``x`` off it becomes two edges ``b -> x``, one per route from ``b`` to
    ``w`` around the blossom.  Redundant non-tree parallels created at the
    base are pruned right away, so no pair carries more than two edges.
    """
    G = g.group
    b = bl.base
    members = bl.members
    on_cycle = members | {b}
    survivors = [v for v in range(g.n) if v not in members]
    old_to_new = {v: i for i, v in enumerate(survivors)}
    inv_psi_b = G.inverse(t.psi[b])

    # provisional edges: (Edge in shrunk vertex ids with provisional id, origin)
    prov: list[tuple[Edge, tuple[int, int]]] = []
    tree_child: dict[int, int] = {}  # child x (old id) of a removed tree edge -> provisional id of its f~1
    for e in g.edges:
        tail_in, head_in = e.tail in members, e.head in members
        if not tail_in and not head_in:
            prov.append((Edge(len(prov), old_to_new[e.tail], old_to_new[e.head], e.label, e.length), (e.id, 0)))
            continue
        if tail_in and head_in:
            continue
        w, x = (e.tail, e.head) if tail_in else (e.head, e.tail)
        if x in on_cycle:
            continue
        f_label = g.directed_label(e.id, w)
        r1_label = G.op(inv_psi_b, t.psi[w])
        r1_len = t.dist[w] - t.dist[b]
        r2_label = G.op(inv_psi_b, detour_label(g, t, bl, w))
        r2_len = detour_length(t, bl, w) - t.dist[b]
        for branch, r_label, r_len in ((1, r1_label, r1_len), (2, r2_label, r2_len)):
            new = Edge(len(prov), old_to_new[b], old_to_new[x], G.op(r_label, f_label), r_len + e.length)
            prov.append((new, (e.id, branch)))
        if t.parent_edge[x] == e.id:
            tree_child[x] = len(prov) - 2

    # shrunk tree in provisional ids
    n_new = len(survivors)
    old_edge_to_prov = {orig[0]: p.id for p, orig in prov if orig[1] == 0}
    parent: list = [None] * n_new
    parent_prov: list = [None] * n_new
    for v in survivors:
        pe = t.parent_edge[v]
        if pe is None:
            continue
        nv = old_to_new[v]
        if v in tree_child:
            parent[nv] = old_to_new[b]
            parent_prov[nv] = tree_child[v]
        else:
            parent[nv] = old_to_new[t.parent[v]]
            parent_prov[nv] = old_edge_to_prov[pe]
    tree_prov = {pid for pid in parent_prov if pid is not None}

    # prune redundant non-tree parallels at the base
    nb = old_to_new[b]
    by_other: dict[int, list[Edge]] = {}
    touched: set[int] = set()
    for p, (_, branch) in prov:
        if nb in (p.tail, p.head):
            x = p.head if p.tail == nb else p.tail
            by_other.setdefault(x, []).append(p)
            if branch:
                touched.add(x)
    dropped: set[int] = set()
    for x in touched:
        group = by_other[x]
        if len(group) <= 2:
            continue
        kept = retain_parallel(
            group,
            lambda p: p.label if p.tail == nb else G.inverse(p.label),
            protected=lambda p: p.id in tree_prov,
        )
        keep_ids = {p.id for p in kept}
        dropped.update(p.id for p in group if p.id not in keep_ids)

    final_id: dict[int, int] = {}
    edges: list[Edge] = []
    origin: list[tuple[int, int]] = []
    for p, orig in prov:
        if p.id in dropped:
            continue
        final_id[p.id] = len(edges)
        edges.append(Edge(len(edges), p.tail, p.head, p.label, p.length))
        origin.append(orig)

    names = tuple(g.names[v] for v in survivors) if g.names is not None else None
    shrunk = LabeledGraph(n_new, tuple(edges), G, names)
    parent_edge = [final_id[pid] if pid is not None else None for pid in parent_prov]
    tree = ShortestPathTree(
        root=old_to_new[t.root],
        dist=tuple(t.dist[v] for v in survivors),
        psi=tuple(t.psi[v] for v in survivors),
        depth=tuple(_rebuild_depth(n_new, old_to_new[t.root], parent)),
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
    )
    return ShrinkResult(g, t, bl, shrunk, tree, tuple(survivors), old_to_new, tuple(origin))


def expand(sr: ShrinkResult, walk: Walk) -> Walk:
    """Expand the base back into the blossom along a walk of the shrunk graph.

    Copied edges map back directly; each replacement edge becomes the route
    around the blossom followed by the removed edge it stands for.  Length
    and label are preserved exactly.
    """
    sr.graph.check_walk(walk)
    vm = sr.vertex_map
    g = sr.source
    nb = sr.old_to_new[sr.blossom.base]
    verts = [vm[walk.vertices[0]]]
    edges: list[int] = []
    for i, eid in enumerate(walk.edges):
        old_eid, branch = sr.origin[eid]
        a, c = walk.vertices[i], walk.vertices[i + 1]
        if branch == 0:
            edges.append(old_eid)
            verts.append(vm[c])
            continue
        f = g.edges[old_eid]
        x_new = c if a == nb else a
        x = vm[x_new]
        w = f.other(x)
        seg = sr.route(w, branch).concat(g.edge_walk(old_eid, w))
        if a != nb:
            seg = seg.reverse()
        edges.extend(seg.edges)
        verts.extend(seg.vertices[1:])
    return Walk(tuple(verts), tuple(edges))


def simplify(g: LabeledGraph, t: ShortestPathTree, bl: Blossom, walk: Walk, target: int) -> Walk:
    """Turn an unorthodox s-target walk into an unorthodox path no longer than it.

    The walk may revisit blossom vertices (other than the base) but must visit
    every other vertex at most once, which is what expanding a shrunk path
    produces.  The output only uses edges of the walk, the blossom and the
    stem.
    """
    G = g.group
    psi = t.psi
    s = t.root
    g.check_walk(walk)
    if walk.start != s or walk.end != target:
        raise StructuralError(f"simplify expects a walk from {s} to {target}")
    members = bl.members
    outside = [v for v in walk.vertices if v not in members]
    if len(outside) != len(set(outside)):
        raise StructuralError("walk repeats a vertex outside the blossom")
    if G.op(psi[s], g.walk_label(walk)) == psi[target]:
        raise StructuralError("walk is orthodox; simplification needs an unorthodox walk")

    vs = walk.vertices
    if not any(v in members for v in vs):
        return walk

    stem = set(t.ancestors(bl.base))
    k = len(walk)
    pos_w = max(i for i, v in enumerate(vs) if v in members or v in stem)
    w = vs[pos_w]

    def label_of(a: int, c: int) -> GroupElement:
        return g.walk_label(walk.subwalk(a, c))

    if w in members:
        tail = walk.subwalk(pos_w, k)
        if G.op(psi[w], g.walk_label(tail)) != psi[target]:
            return tree_path(t, w).concat(tail)
        return detour_path(g, t, bl, w).concat(tail)

    pos_u = min(i for i, v in enumerate(vs) if v in members)
    pos_v = max(i for i, v in enumerate(vs) if v in members)
    depth = t.depth
    pos_y1 = max((i for i in range(pos_u + 1) if vs[i] in stem), key=lambda i: depth[vs[i]])
    pos_y2 = max((i for i in range(pos_v, k + 1) if vs[i] in stem), key=lambda i: depth[vs[i]])
    y1, y2 = vs[pos_y1], vs[pos_y2]
    if y1 == y2:
        raise StructuralError(f"stem vertex {y1} is visited twice")

    if depth[y1] > depth[y2]:
        y, v = y1, vs[pos_v]
        guard = G.op(
            G.op(G.op(label_of(0, pos_y1), G.inverse(psi[y])), psi[v]),
            label_of(pos_v, k),
        )
        if G.op(psi[s], guard) != psi[target]:
            middle = t.climb(v, y)
        else:
            q = detour_path(g, t, bl, v)
            middle = q.subwalk(q.position(y), len(q))
        return concat(walk.subwalk(0, pos_y1), middle, walk.subwalk(pos_v, k))

    y, u = y2, vs[pos_u]
    guard = G.op(
        G.op(G.op(label_of(0, pos_u), G.inverse(psi[u])), psi[y]),
        label_of(pos_y2, k),
    )
    if G.op(psi[s], guard) != psi[target]:
        middle = t.climb(u, y).reverse()
    else:
        q = detour_path(g, t, bl, u)
        middle = q.subwalk(q.position(y), len(q)).reverse()
    return concat(walk.subwalk(0, pos_u), middle, walk.subwalk(pos_y2, k))
