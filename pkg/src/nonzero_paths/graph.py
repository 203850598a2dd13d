"""Group-labeled multigraphs and walks.

An edge is stored with one orientation ``tail -> head`` and the label of that
orientation; traversing it from ``head`` to ``tail`` contributes the inverse
label.  Vertices are dense integers ``0 .. n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import StructuralError, UsageError
from .groups import Group, GroupElement


@dataclass(frozen=True, slots=True)
class Edge:
    id: int
    tail: int
    head: int
    label: GroupElement
    length: float

    def other(self, v: int) -> int:
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise StructuralError(f"vertex {v} is not an endpoint of edge {self.id}")


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge sequence ``v0, e1, v1, ..., ek, vk``.

    ``vertices`` has one more entry than ``edges``.  A walk does not know its
    graph; evaluate it with :meth:`LabeledGraph.walk_length` and
    :meth:`LabeledGraph.walk_label`.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise StructuralError("a walk needs exactly one more vertex than edges")

    @classmethod
    def empty(cls, v: int) -> "Walk":
        return cls((v,), ())

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    def reverse(self) -> "Walk":
        return Walk(self.vertices[::-1], self.edges[::-1])

    def concat(self, other: "Walk") -> "Walk":
        if self.end != other.start:
            raise StructuralError(f"cannot concatenate: walk ends at {self.end}, next starts at {other.start}")
        return Walk(self.vertices + other.vertices[1:], self.edges + other.edges)

    def __mul__(self, other: "Walk") -> "Walk":
        return self.concat(other)

    def subwalk(self, i: int, j: int) -> "Walk":
        """Contiguous piece between vertex positions ``i`` and ``j`` (inclusive)."""
        if not 0 <= i <= j <= len(self.edges):
            raise UsageError(f"subwalk positions ({i}, {j}) out of range for a walk with {len(self.edges)} edges")
        return Walk(self.vertices[i:j + 1], self.edges[i:j])

    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_cycle(self) -> bool:
        if len(self.edges) < 2 or self.vertices[0] != self.vertices[-1]:
            return False
        rest = self.vertices[1:]
        return len(set(rest)) == len(rest) and self.edges[0] not in self.edges[1:]

    def position(self, v: int) -> int:
        """Position of the unique occurrence of ``v``."""
        return self.vertices.index(v)


def concat(*walks: Walk) -> Walk:
    out = walks[0]
    for w in walks[1:]:
        out = out.concat(w)
    return out


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable Γ-labeled multigraph with nonnegative edge lengths."""

    n: int
    edges: tuple[Edge, ...]
    group: Group
    names: tuple[str, ...] | None = None
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            if e.id != idx:
                raise StructuralError(f"edge ids must be dense and ordered; position {idx} holds id {e.id}")
            if not (0 <= e.tail < self.n and 0 <= e.head < self.n):
                raise StructuralError(f"edge {e.id} has an endpoint outside 0..{self.n - 1}")
            if e.tail == e.head:
                raise StructuralError(f"edge {e.id} is a loop at vertex {e.tail}")
            if not e.length >= 0 or e.length == float("inf"):
                raise StructuralError(f"edge {e.id} has invalid length {e.length!r}")
            adj[e.tail].append((e.id, e.head))
            adj[e.head].append((e.id, e.tail))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        if self.names is not None and len(self.names) != self.n:
            raise StructuralError("names must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        n: int,
        group: Group,
        edges: Iterable[tuple[int, int, float, GroupElement]],
        names: Sequence[str] | None = None,
    ) -> "LabeledGraph":
        """Build from ``(tail, head, length, label)`` tuples; ids follow input order."""
        recs = []
        for i, (u, v, length, label) in enumerate(edges):
            if not group.contains(label):
                raise UsageError(f"edge {i}: label {label!r} is not an element of {group.spec()}")
            recs.append(Edge(i, u, v, label, length))
        return cls(n, tuple(recs), group, tuple(names) if names is not None else None)

    @property
    def m(self) -> int:
        return len(self.edges)

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def directed_label(self, eid: int, frm: int) -> GroupElement:
        """Label of edge ``eid`` traversed starting at ``frm``."""
        e = self.edges[eid]
        if frm == e.tail:
            return e.label
        if frm == e.head:
            return self.group.inverse(e.label)
        raise StructuralError(f"vertex {frm} is not an endpoint of edge {eid}")

    def check_walk(self, w: Walk) -> None:
        for i, eid in enumerate(w.edges):
            if not 0 <= eid < self.m:
                raise StructuralError(f"walk uses unknown edge {eid}")
            e = self.edges[eid]
            a, b = w.vertices[i], w.vertices[i + 1]
            if {a, b} != {e.tail, e.head}:
                raise StructuralError(f"edge {eid} does not join {a} and {b}")

    def walk_length(self, w: Walk) -> float:
        self.check_walk(w)
        return sum(self.edges[eid].length for eid in w.edges)

    def walk_label(self, w: Walk) -> GroupElement:
        self.check_walk(w)
        G = self.group
        acc = G.identity
        for i, eid in enumerate(w.edges):
            acc = G.op(acc, self.directed_label(eid, w.vertices[i]))
        return acc

    def edge_walk(self, eid: int, frm: int) -> Walk:
        """Single-edge walk traversing ``eid`` from ``frm``."""
        return Walk((frm, self.edges[eid].other(frm)), (eid,))

    def component(self, s: int) -> list[int]:
        """Vertices reachable from ``s``, in increasing order."""
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for _, w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return [v for v in range(self.n) if seen[v]]

    def induced(self, vertices: Sequence[int]) -> tuple["LabeledGraph", list[int], list[int]]:
        """Subgraph induced by ``vertices``.

        Returns ``(subgraph, vertex_map, edge_map)`` where the maps send the
        subgraph's ids back to ids of ``self``.
        """
        index = {v: i for i, v in enumerate(vertices)}
        kept = [e for e in self.edges if e.tail in index and e.head in index]
        sub_edges = tuple(
            Edge(i, index[e.tail], index[e.head], e.label, e.length) for i, e in enumerate(kept)
        )
        names = tuple(self.names[v] for v in vertices) if self.names is not None else None
        return LabeledGraph(len(vertices), sub_edges, self.group, names), list(vertices), [e.id for e in kept]

    def with_edges(self, edges: Sequence[Edge], n: int | None = None, names=None) -> "LabeledGraph":
        """New graph over the same group with the given edges renumbered densely."""
        recs = tuple(Edge(i, e.tail, e.head, e.label, e.length) for i, e in enumerate(edges))
        return LabeledGraph(self.n if n is None else n, recs, self.group, names if names is not None else self.names)


def map_walk(w: Walk, vertex_map: Sequence[int], edge_map: Sequence[int]) -> Walk:
    """Translate a walk through id maps (e.g. back to a parent graph)."""
    return Walk(tuple(vertex_map[v] for v in w.vertices), tuple(edge_map[e] for e in w.edges))
