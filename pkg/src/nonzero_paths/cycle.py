"""Shortest non-zero cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .blossom import find_lowest_blossom
from .graph import LabeledGraph, Walk
from .recursive import shortest_nonzero_path
from .spt import dijkstra


@dataclass(frozen=True)
class CycleResult:
    cycle: Walk | None
    length: float | None = None
    root: int | None = None
    edge: int | None = None
    heights: dict[int, float] = field(default_factory=dict)  # root -> lowest blossom height

    @property
    def found(self) -> bool:
        return self.cycle is not None

    @property
    def status(self) -> str:
        return "FOUND" if self.found else "INFEASIBLE"


def shortest_nonzero_cycle(g: LabeledGraph) -> CycleResult:
    """One shortest-path tree and one lowest blossom per root; keep the shortest blossom.

    Ties go to the smaller root, then the smaller edge id.  Runs on every
    component since each root only sees its own.
    """
    best = None
    heights: dict[int, float] = {}
    for r in range(g.n):
        tree = dijkstra(g, r)
        bl = find_lowest_blossom(g, tree)
        if bl is None:
            continue
        heights[r] = bl.height
        length = g.walk_length(bl.cycle)
        key = (length, r, bl.edge)
        if best is None or key < best[0]:
            best = (key, bl)
    if best is None:
        return CycleResult(None, heights=heights)
    (length, r, eid), bl = best
    return CycleResult(bl.cycle, length, r, eid, heights)


def shortest_nonzero_cycle_naive(g: LabeledGraph, algorithm: str = "fast") -> CycleResult:
    """For every edge, close the best u-v path avoiding it into a non-zero cycle.

    With ``e`` stored as ``u -> v``, the cycle ``P * (v, e, u)`` is non-zero
    iff ``label(P) != label(e)``, so the path query forbids ``label(e)``.
    """
    best = None
    for e in g.edges:
        rest = [f for f in g.edges if f.id != e.id]
        h = g.with_edges(rest)
        res = shortest_nonzero_path(h, e.tail, e.head, forbidden=e.label, algorithm=algorithm)
        if not res.found:
            continue
        # h renumbers edges skipping e.id
        back = [f.id for f in rest]
        p = res.path
        cycle = Walk(p.vertices + (e.tail,), tuple(back[i] for i in p.edges) + (e.id,))
        key = (res.length + e.length, e.id)
        if best is None or key < best[0]:
            best = (key, cycle)
    if best is None:
        return CycleResult(None)
    (length, eid), cycle = best
    return CycleResult(cycle, length, cycle.start, eid)
