"""Random instance generators and witness checks shared by the test modules."""

from __future__ import annotations

import random

from nonzero_paths import CyclicGroup, DirectProduct, FreeGroup, LabeledGraph, dijkstra, reduce_parallel_edges
from nonzero_paths.instance import random_graph
from nonzero_paths.oracle import label_profiles

GROUPS = {
    "Z2": CyclicGroup(2),
    "Z3": CyclicGroup(3),
    "Z6": CyclicGroup(6),
    "Z2xZ3": DirectProduct([CyclicGroup(2), CyclicGroup(3)]),
    "Free2": FreeGroup(2),
}


def random_instance(rng: random.Random, group, nmax=9, mmax=18, maxlen=10):
    """Possibly disconnected multigraph plus two distinct terminals."""
    n = rng.randint(2, nmax)
    m = rng.randint(0, mmax)
    g = random_graph(rng, n, m, group, maxlen)
    s, t = rng.sample(range(n), 2)
    return g, s, t


def connected_instance(rng: random.Random, group, nmax=8, mmax=16, maxlen=10):
    """Connected graph with at most two parallel edges per pair, a root and its SPT."""
    n = rng.randint(2, nmax)
    m = rng.randint(n - 1, max(n - 1, mmax))
    g, _ = reduce_parallel_edges(random_graph(rng, n, m, group, maxlen, connected=True))
    s = rng.randrange(n)
    return g, s, dijkstra(g, s)


def unorthodox_distances(g: LabeledGraph, tree) -> list:
    """Oracle shortest unorthodox s-w length for every w (None where none exists)."""
    profiles = label_profiles(g, tree.root)
    return [profiles[w].avoiding(tree.psi[w]) for w in range(g.n)]


def assert_witness(g: LabeledGraph, walk, s, t, forbidden, length):
    g.check_walk(walk)
    assert walk.is_path()
    assert walk.start == s and walk.end == t
    assert g.walk_label(walk) != forbidden
    assert g.walk_length(walk) == length
