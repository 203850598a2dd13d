"""Property checks for the structural lemmas, one function per property.

Each check draws one random instance from ``rng`` and raises AssertionError on
a violation.  The unit suites run them a handful of times; the acceptance
suite runs each 500 times.
"""

from __future__ import annotations

import random

from helpers import GROUPS, connected_instance, unorthodox_distances

from nonzero_paths import dijkstra, expand, find_lowest_blossom, shrink, simplify
from nonzero_paths.blossom import detour_path
from nonzero_paths.oracle import enumerate_paths_from, enumerate_st_paths, oracle_best_path
from nonzero_paths.spt import check_potential, is_consistent

MAX_SAMPLED_PATHS = 60


def _group(rng):
    return GROUPS[rng.choice(sorted(GROUPS))]


def lemma1_distance_bound(rng: random.Random) -> None:
    g, _, tree = connected_instance(rng, _group(rng))
    x, y = rng.randrange(g.n), rng.randrange(g.n)
    for walk, length, _ in enumerate_st_paths(g, x, y):
        assert length >= abs(tree.dist[x] - tree.dist[y])


def lemma1_inconsistent_edge(rng: random.Random) -> None:
    g, _, tree = connected_instance(rng, _group(rng))
    op = g.group.op
    x, y = rng.randrange(g.n), rng.randrange(g.n)
    tree_edges = tree.tree_edges()
    for walk, _, label in enumerate_st_paths(g, x, y):
        if op(tree.psi[x], label) != tree.psi[y]:
            assert any(e not in tree_edges and not is_consistent(g, tree, e) for e in walk.edges)


def _with_blossom(rng):
    while True:
        g, s, tree = connected_instance(rng, _group(rng))
        bl = find_lowest_blossom(g, tree)
        if bl is not None:
            return g, s, tree, bl


def lemma2_detour_unorthodox(rng: random.Random) -> None:
    g, s, tree, bl = _with_blossom(rng)
    op = g.group.op
    stem = tree.ancestors(bl.base)
    for w in bl.members:
        q = detour_path(g, tree, bl, w)
        for z in stem:
            i = q.position(z)
            sub = q.subwalk(i, len(q))
            assert op(tree.psi[z], g.walk_label(sub)) != tree.psi[w]


def lemma2_detour_shortest(rng: random.Random) -> None:
    g, s, tree, bl = _with_blossom(rng)
    best = unorthodox_distances(g, tree)
    for w in bl.members:
        q = detour_path(g, tree, bl, w)
        assert q.is_path() and q.start == s and q.end == w
        assert g.walk_label(q) != tree.psi[w]
        assert g.walk_length(q) == best[w]


def _shrunk(rng):
    g, s, tree, bl = _with_blossom(rng)
    return g, s, tree, bl, shrink(g, tree, bl)


def _sample_paths(rng, sr, start):
    paths = [w for w, _, _ in enumerate_paths_from(sr.graph, start)]
    rng.shuffle(paths)
    return paths[:MAX_SAMPLED_PATHS]


def lemma4_expand_preserves(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    for p in _sample_paths(rng, sr, sr.tree.root):
        w = expand(sr, p)
        g.check_walk(w)
        assert g.walk_length(w) == sr.graph.walk_length(p)
        assert g.walk_label(w) == sr.graph.walk_label(p)


def lemma4_expand_shape(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    for p in _sample_paths(rng, sr, rng.randrange(sr.graph.n)):
        w = expand(sr, p)
        used = sum(1 for e in p.edges if sr.origin[e][1] != 0)
        if used <= 1:
            assert w.is_path()
        else:
            outside = [v for v in w.vertices if v not in bl.members]
            assert len(outside) == len(set(outside))


def lemma4_tree_is_spt(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    assert sr.graph.n == g.n - len(bl.members)
    fresh = dijkstra(sr.graph, sr.tree.root)
    assert fresh.dist == sr.tree.dist
    assert check_potential(sr.graph, sr.tree)
    assert all(sr.tree.reachable(v) for v in range(sr.graph.n))
    for v in range(sr.graph.n):
        old = sr.vertex_map[v]
        assert sr.tree.dist[v] == tree.dist[old] and sr.tree.psi[v] == tree.psi[old]


def _survivors(g, s, bl):
    return [t for t in range(g.n) if t != s and t not in bl.members]


def lemma5_simplify(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    op = sr.graph.group.op
    targets = _survivors(g, s, bl)
    if not targets:
        return
    t = rng.choice(targets)
    nt = sr.old_to_new[t]
    ns = sr.tree.root
    checked = 0
    for p, length, label in enumerate_st_paths(sr.graph, ns, nt):
        if label == sr.tree.psi[nt]:
            continue
        w = expand(sr, p)
        r = simplify(g, tree, bl, w, t)
        assert r.is_path() and r.start == s and r.end == t
        assert g.walk_label(r) != tree.psi[t]
        assert g.walk_length(r) <= g.walk_length(w)
        checked += 1
        if checked >= MAX_SAMPLED_PATHS:
            break


def lemma6_feasibility(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    best_g = unorthodox_distances(g, tree)
    best_h = unorthodox_distances(sr.graph, sr.tree)
    for t in _survivors(g, s, bl):
        assert (best_g[t] is None) == (best_h[sr.old_to_new[t]] is None)


def lemma6_optimality(rng: random.Random) -> None:
    g, s, tree, bl, sr = _shrunk(rng)
    best_g = unorthodox_distances(g, tree)
    for t in _survivors(g, s, bl):
        nt = sr.old_to_new[t]
        found = oracle_best_path(sr.graph, sr.tree.root, nt, forbidden=sr.tree.psi[nt])
        if found is None:
            continue
        r = simplify(g, tree, bl, expand(sr, found[1]), t)
        assert g.walk_length(r) == best_g[t]
        assert g.walk_label(r) != tree.psi[t]


LEMMA_CHECKS = {
    "Lemma 1-(1) distance bound": lemma1_distance_bound,
    "Lemma 1-(2) inconsistent non-tree edge": lemma1_inconsistent_edge,
    "Lemma 2-(1) detour subwalks unorthodox": lemma2_detour_unorthodox,
    "Lemma 2-(2)/(3) detour is shortest unorthodox": lemma2_detour_shortest,
    "Lemma 4-(1) expand preserves length and label": lemma4_expand_preserves,
    "Lemma 4-(2) expanded walk shape": lemma4_expand_shape,
    "Lemma 4-(3) shrunk tree is an SPT": lemma4_tree_is_spt,
    "Lemma 5 simplify": lemma5_simplify,
    "Lemma 6-(1) feasibility preserved": lemma6_feasibility,
    "Lemma 6-(2) simplified optimum": lemma6_optimality,
}


def run_check(check, runs: int, seed: int) -> None:
    for i in range(runs):
        check(random.Random(seed * 100003 + i))


