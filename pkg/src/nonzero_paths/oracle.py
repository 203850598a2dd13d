"""Brute-force reference answers.

Everything here is deliberately exponential and straightforward: these
functions are the ground truth the solvers are tested against.  Enumeration
stops with :class:`BudgetExceeded` instead of returning a partial answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceeded
from .graph import LabeledGraph, Walk
from .groups import GroupElement

INFEASIBLE = None


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 10
    max_paths: int = 10**6


DEFAULT_BUDGET = OracleBudget()


def _check_size(g: LabeledGraph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"graph has {g.n} vertices, oracle budget allows {budget.max_vertices}")


def enumerate_paths_from(
    g: LabeledGraph, s: int, budget: OracleBudget = DEFAULT_BUDGET
) -> Iterator[tuple[Walk, float, GroupElement]]:
    """Every simple path starting at ``s`` (including the empty one), with length and label."""
    _check_size(g, budget)
    G = g.group
    count = 0
    verts = [s]
    edges: list[int] = []
    on_path = [False] * g.n
    on_path[s] = True

    def rec(v: int, length: float, label) -> Iterator[tuple[Walk, float, GroupElement]]:
        nonlocal count
        count += 1
        if count > budget.max_paths:
            raise BudgetExceeded(f"more than {budget.max_paths} paths enumerated")
        yield Walk(tuple(verts), tuple(edges)), length, label
        for eid, w in g.adjacency[v]:
            if on_path[w]:
                continue
            on_path[w] = True
            verts.append(w)
            edges.append(eid)
            yield from rec(w, length + g.edges[eid].length, G.op(label, g.directed_label(eid, v)))
            verts.pop()
            edges.pop()
            on_path[w] = False

    yield from rec(s, 0, G.identity)


def enumerate_st_paths(
    g: LabeledGraph, s: int, t: int, budget: OracleBudget = DEFAULT_BUDGET
) -> Iterator[tuple[Walk, float, GroupElement]]:
    """Every simple s-t path exactly once, with its length and label."""
    for walk, length, label in enumerate_paths_from(g, s, budget):
        if walk.end == t and (s != t or not walk.edges):
            yield walk, length, label


def oracle_best_path(
    g: LabeledGraph,
    s: int,
    t: int,
    forbidden: GroupElement | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[float, Walk] | None:
    """Shortest simple s-t path whose label is not ``forbidden``, with the path itself."""
    if forbidden is None:
        forbidden = g.group.identity
    best = None
    for walk, length, label in enumerate_st_paths(g, s, t, budget):
        if label != forbidden and (best is None or length < best[0]):
            best = (length, walk)
    return best


def oracle_shortest_path_with_label_constraint(
    g: LabeledGraph,
    s: int,
    t: int,
    forbidden: GroupElement | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> float | None:
    """Minimum length of a simple s-t path whose label is not ``forbidden`` (None if none)."""
    best = oracle_best_path(g, s, t, forbidden, budget)
    return INFEASIBLE if best is None else best[0]


@dataclass
class LabelProfile:
    """For one target: the shortest path overall and the shortest with a different label.

    Enough to answer "shortest path with label != X" for every X.
    """

    best: tuple[float, GroupElement] | None = None
    runner_up: float | None = None  # shortest length with label != best label

    def offer(self, length: float, label) -> None:
        if self.best is None:
            self.best = (length, label)
        elif label == self.best[1]:
            if length < self.best[0]:
                self.best = (length, label)
        elif length < self.best[0]:
            self.runner_up = self.best[0]
            self.best = (length, label)
        elif self.runner_up is None or length < self.runner_up:
            self.runner_up = length

    def avoiding(self, forbidden) -> float | None:
        if self.best is None:
            return None
        return self.best[0] if self.best[1] != forbidden else self.runner_up


def label_profiles(g: LabeledGraph, s: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[LabelProfile]:
    """One DFS from ``s`` summarising every simple path per end vertex."""
    profiles = [LabelProfile() for _ in range(g.n)]
    for walk, length, label in enumerate_paths_from(g, s, budget):
        if walk.edges:
            profiles[walk.end].offer(length, label)
    return profiles


def enumerate_simple_cycles(
    g: LabeledGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> Iterator[tuple[Walk, float, GroupElement]]:
    """Every simple cycle once up to rotation and reflection.

    Each cycle is reported from its smallest vertex ``r``, leaving along the
    smaller of its two edges at ``r``.
    """
    _check_size(g, budget)
    G = g.group
    count = 0
    for r in range(g.n):
        for walk, length, label in enumerate_paths_from(g, r, budget):
            k = len(walk)
            if k == 0 or min(walk.vertices) < r:
                continue
            v = walk.end
            for eid, w in g.adjacency[v]:
                if w != r or eid in walk.edges:
                    continue
                if not walk.edges[0] < eid:
                    continue
                count += 1
                if count > budget.max_paths:
                    raise BudgetExceeded(f"more than {budget.max_paths} cycles enumerated")
                cyc = Walk(walk.vertices + (r,), walk.edges + (eid,))
                yield cyc, length + g.edges[eid].length, G.op(label, g.directed_label(eid, v))


def oracle_best_cycle(g: LabeledGraph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[float, Walk] | None:
    best = None
    ident = g.group.identity
    for cyc, length, label in enumerate_simple_cycles(g, budget):
        if label != ident and (best is None or length < best[0]):
            best = (length, cyc)
    return best


def oracle_shortest_nonzero_cycle(g: LabeledGraph, budget: OracleBudget = DEFAULT_BUDGET) -> float | None:
    best = oracle_best_cycle(g, budget)
    return INFEASIBLE if best is None else best[0]


def count_paths_dp(g: LabeledGraph, s: int, t: int) -> int:
    """Number of simple s-t paths by subset dynamic programming (independent check)."""
    n = g.n
    # ways[mask][v]: simple paths from s visiting exactly `mask`, ending at v
    ways = [dict() for _ in range(1 << n)]
    ways[1 << s][s] = 1
    total = 1 if s == t else 0
    for mask in range(1 << n):
        for v, cnt in ways[mask].items():
            for _eid, w in g.adjacency[v]:
                if mask >> w & 1:
                    continue
                nm = mask | (1 << w)
                ways[nm][w] = ways[nm].get(w, 0) + cnt
                if w == t:
                    total += cnt
    return total
