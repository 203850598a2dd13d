"""Redundant parallel edges.

Between a fixed pair of vertices at most two parallel edges matter for
non-zero (or unorthodox) path queries: of two edges with the same directed
label the shorter one dominates, and of three edges with pairwise distinct
labels a longest one can always be replaced by one of the other two.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Hashable, Sequence

from .graph import Edge, LabeledGraph


def retain_parallel(
    edges: Sequence[Edge],
    label_from: Callable[[Edge], Hashable],
    protected: Callable[[Edge], bool] = lambda e: False,
) -> list[Edge]:
    """Sequentially scan parallel ``edges`` and keep at most two.

    ``label_from(e)`` must give every edge's label in one common direction.
    Protected edges are never dropped; the callers only protect tree edges,
    which are shortest among their parallels, so the bound of two still holds.
    """
    kept: list[Edge] = []
    for f in edges:
        lab = label_from(f)
        same = next((r for r in kept if label_from(r) == lab), None)
        if same is not None:
            if protected(same):
                continue
            if protected(f) or (f.length, f.id) < (same.length, same.id):
                kept[kept.index(same)] = f
            continue
        if len(kept) < 2:
            kept.append(f)
            continue
        # three distinct labels: drop a longest (ties: largest id) unprotected one
        pool = [r for r in kept + [f] if not protected(r)]
        drop = max(pool, key=lambda r: (r.length, r.id))
        kept = [r for r in kept + [f] if r is not drop]
    return kept


def reduce_parallel_edges(g: LabeledGraph) -> tuple[LabeledGraph, list[int]]:
    """Keep at most two edges between every vertex pair.

    Edges are scanned in id order.  Returns the reduced graph and, for each of
    its edges, the id of the edge of ``g`` it came from.
    """
    groups: dict[tuple[int, int], list[Edge]] = defaultdict(list)
    for e in g.edges:
        groups[(min(e.tail, e.head), max(e.tail, e.head))].append(e)
    G = g.group
    survivors: set[int] = set()
    for (a, _b), group in groups.items():
        if len(group) == 1:
            survivors.add(group[0].id)
            continue
        kept = retain_parallel(group, lambda e, a=a: e.label if e.tail == a else G.inverse(e.label))
        survivors.update(e.id for e in kept)
    kept_edges = [e for e in g.edges if e.id in survivors]
    return g.with_edges(kept_edges), [e.id for e in kept_edges]
