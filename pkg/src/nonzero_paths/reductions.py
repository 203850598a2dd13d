"""Applications: parity-constrained paths and non-separating cycles.

Parity: label every edge ``1`` in Z2, so a walk is non-zero exactly when it
uses an odd number of edges.

Surfaces: for a graph embedded on an orientable surface (given by a rotation
system) a tree-cotree decomposition leaves ``2 * genus`` edges outside both
trees.  Each leftover edge closes a cycle in the dual graph; labeling edges
in ``Z2^k`` by which of those dual cycles they lie on makes a cycle's label
its Z2-homology class, so the shortest non-zero cycle is a shortest
non-separating cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import StructuralError
from .graph import LabeledGraph
from .groups import CyclicGroup, DirectProduct
from .recursive import PathResult, shortest_nonzero_path


def parity_labeling(
    n: int, edges: Iterable[tuple[int, int, float]], names: Sequence[str] | None = None
) -> LabeledGraph:
    """Z2-labeled graph where every edge (oriented low id -> high id) carries 1."""
    return LabeledGraph.from_edges(
        n, CyclicGroup(2), [(min(u, v), max(u, v), length, 1) for u, v, length in edges], names
    )


def shortest_odd_path(g: LabeledGraph, s: int, t: int, algorithm="fast") -> PathResult:
    """Shortest s-t path with an odd number of edges (``g`` from :func:`parity_labeling`)."""
    return shortest_nonzero_path(g, s, t, forbidden=0, algorithm=algorithm)


def shortest_even_path(g: LabeledGraph, s: int, t: int, algorithm="fast") -> PathResult:
    return shortest_nonzero_path(g, s, t, forbidden=1, algorithm=algorithm)


@dataclass(frozen=True)
class RotationSystem:
    """Orientable embedding: cyclic order of incident edge ids around each vertex.

    ``edges[i] = (tail, head, length)``.  A vertex's rotation lists each
    incident edge once (an edge between parallel copies is still listed once
    at each end).
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    rotations: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.rotations) != self.n:
            raise StructuralError(f"expected {self.n} rotations, got {len(self.rotations)}")
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v, _length) in enumerate(self.edges):
            if u == v:
                raise StructuralError(f"edge {eid} is a loop at vertex {u}")
            incident[u].append(eid)
            incident[v].append(eid)
        for v in range(self.n):
            if sorted(self.rotations[v]) != sorted(incident[v]):
                raise StructuralError(f"rotation at vertex {v} does not list exactly its incident edges")
        if self.n and len(self._components()) != 1:
            raise StructuralError("embedded graph must be connected")

    def _components(self) -> list[set[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen: set[int] = set()
        comps = []
        for r in range(self.n):
            if r in seen:
                continue
            comp = {r}
            stack = [r]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def faces(self) -> list[list[tuple[int, int]]]:
        """Face boundaries as lists of darts ``(edge id, from vertex)``.

        The dart after ``(e, u -> v)`` leaves ``v`` along the edge that
        follows ``e`` in ``v``'s rotation.
        """
        nxt: dict[tuple[int, int], tuple[int, int]] = {}
        for eid, (u, v, _) in enumerate(self.edges):
            for a, b in ((u, v), (v, u)):
                rot = self.rotations[b]
                f = rot[(rot.index(eid) + 1) % len(rot)]
                nxt[(eid, a)] = (f, b)
        seen: set[tuple[int, int]] = set()
        out = []
        for start in sorted(nxt):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = nxt[d]
            out.append(face)
        return out

    @property
    def genus(self) -> int:
        chi = self.n - len(self.edges) + len(self.faces())
        if chi % 2:
            raise StructuralError(f"odd Euler characteristic {chi}")
        return (2 - chi) // 2


@dataclass(frozen=True)
class HomologyLabeling:
    graph: LabeledGraph
    tree: frozenset[int]
    cotree: frozenset[int]
    leftover: tuple[int, ...]  # leftover edge behind each coordinate of Z2^k
    faces: tuple[tuple[tuple[int, int], ...], ...]


def _tree_cotree(rs: RotationSystem):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(rs.n)]
    for eid, (u, v, _) in enumerate(rs.edges):
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    tree: set[int] = set()
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for eid, y in adj[x]:
            if y not in seen:
                seen.add(y)
                tree.add(eid)
                queue.append(y)

    faces = rs.faces()
    face_of = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    dual_adj: list[list[tuple[int, int]]] = [[] for _ in faces]
    for eid, (u, v, _) in enumerate(rs.edges):
        if eid in tree:
            continue
        f1, f2 = face_of[(eid, u)], face_of[(eid, v)]
        dual_adj[f1].append((eid, f2))
        dual_adj[f2].append((eid, f1))
    # dual BFS tree: parent face, edge to parent, depth
    up: dict[int, tuple[int | None, int | None, int]] = {0: (None, None, 0)}
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for eid, f2 in dual_adj[f]:
            if f2 not in up:
                up[f2] = (f, eid, up[f][2] + 1)
                queue.append(f2)
    cotree = {e for _, e, _ in up.values() if e is not None}
    leftover = tuple(e for e in range(len(rs.edges)) if e not in tree and e not in cotree)
    return frozenset(tree), frozenset(cotree), leftover, faces, face_of, up


def tree_cotree(rs: RotationSystem) -> tuple[frozenset[int], frozenset[int], tuple[int, ...]]:
    """BFS spanning tree, a dual spanning tree avoiding it, and the leftover edges."""
    tree, cotree, leftover, *_ = _tree_cotree(rs)
    return tree, cotree, leftover


def _cotree_path(up, f1: int, f2: int) -> list[int]:
    out = []
    while f1 != f2:
        if up[f1][2] >= up[f2][2]:
            f1, e, _ = up[f1]
        else:
            f2, e, _ = up[f2]
        out.append(e)
    return out


def homology_labeling(rs: RotationSystem) -> HomologyLabeling:
    """Z2-cohomology labels with one coordinate per leftover edge.

    Coordinate ``i`` is the dual cycle of leftover edge ``l_i``: ``l_i`` plus
    the cotree path joining the faces on its two sides.  An edge's label has a
    1 in coordinate ``i`` iff the edge lies on that dual cycle.  A face
    boundary meets every dual cycle an even number of times, and the
    fundamental cycle of ``l_j`` in the tree meets dual cycle ``i`` exactly
    when ``i == j``, so a cycle's label vanishes iff it is null-homologous.
    Tree edges always get the identity.
    """
    tree, cotree, leftover, faces, face_of, up = _tree_cotree(rs)
    k = len(leftover)
    if k != 2 * rs.genus:
        raise StructuralError(f"tree-cotree left {k} edges, expected {2 * rs.genus}")
    vecs = [[0] * k for _ in rs.edges]
    for i, e in enumerate(leftover):
        u, v, _ = rs.edges[e]
        for f in [e] + _cotree_path(up, face_of[(e, u)], face_of[(e, v)]):
            vecs[f][i] ^= 1
    group = DirectProduct([CyclicGroup(2)] * k)
    labeled = [(u, v, length, tuple(vecs[eid])) for eid, (u, v, length) in enumerate(rs.edges)]
    g = LabeledGraph.from_edges(rs.n, group, labeled, rs.names)
    return HomologyLabeling(g, tree, cotree, leftover, tuple(tuple(f) for f in faces))


def face_boundary_span(rs: RotationSystem) -> set[frozenset[int]]:
    """All Z2 sums of face boundaries, as edge sets (exhaustive over face subsets)."""
    boundaries = []
    for face in rs.faces():
        vec: set[int] = set()
        for eid, _ in face:
            vec ^= {eid}
        boundaries.append(frozenset(vec))
    span = set()
    for mask in range(1 << len(boundaries)):
        acc: set[int] = set()
        for i, b in enumerate(boundaries):
            if mask >> i & 1:
                acc ^= b
        span.add(frozenset(acc))
    return span


def toroidal_grid(rows: int, cols: int, length: float = 1) -> RotationSystem:
    """``rows x cols`` grid on the torus with the standard (right, up, left, down) rotation."""
    def vid(i, j):
        return (i % rows) * cols + (j % cols)

    edges = []
    right, down = {}, {}
    for i in range(rows):
        for j in range(cols):
            right[i, j] = len(edges)
            edges.append((vid(i, j), vid(i, j + 1), length))
            down[i, j] = len(edges)
            edges.append((vid(i, j), vid(i + 1, j), length))
    rotations = []
    for i in range(rows):
        for j in range(cols):
            rotations.append((right[i, j], down[(i - 1) % rows, j], right[i, (j - 1) % cols], down[i, j]))
    names = tuple(f"v{i}_{j}" for i in range(rows) for j in range(cols))
    return RotationSystem(rows * cols, tuple(edges), tuple(rotations), names)
