import random

import pytest

from helpers import GROUPS, assert_witness, connected_instance, random_instance, unorthodox_distances
from test_graph import k_graph

from nonzero_paths import (
    CyclicGroup,
    IntegerGroup,
    LabeledGraph,
    SolverStats,
    dijkstra,
    shortest_nonzero_path,
    sup_recursive,
)
from nonzero_paths.errors import UsageError
from nonzero_paths.oracle import oracle_shortest_path_with_label_constraint


@pytest.mark.parametrize("algo", ["fast", "recursive"])
def test_fixture_k(algo):
    g = k_graph()
    res = shortest_nonzero_path(g, 0, 3, algorithm=algo)
    assert res.status == "FOUND" and res.length == 3 and res.label == 1
    assert_witness(g, res.path, 0, 3, 0, 3)


@pytest.mark.parametrize("algo", ["fast", "recursive"])
def test_fixture_k_forbidding_one(algo):
    res = shortest_nonzero_path(k_graph(), 0, 3, forbidden=1, algorithm=algo)
    assert res.length == 2 and res.label == 0


def test_target_on_first_blossom():
    g = k_graph()
    t = dijkstra(g, 0)
    p = sup_recursive(g, 0, 2, t)
    assert p.vertices == (0, 1, 2) and g.walk_length(p) == 2


def test_tree_path_already_nonzero():
    g = LabeledGraph.from_edges(3, CyclicGroup(3), [(0, 1, 1, 1), (1, 2, 1, 1), (0, 2, 5, 0)])
    res = shortest_nonzero_path(g, 0, 2)
    assert res.length == 2 and res.label == 2


@pytest.mark.parametrize("algo", ["fast", "recursive"])
def test_infeasible_cases(algo):
    all_zero = LabeledGraph.from_edges(3, CyclicGroup(2), [(0, 1, 1, 0), (1, 2, 1, 0), (0, 2, 1, 0)])
    assert shortest_nonzero_path(all_zero, 0, 2, algorithm=algo).status == "INFEASIBLE"
    split = LabeledGraph.from_edges(4, CyclicGroup(2), [(0, 1, 1, 1), (2, 3, 1, 1)])
    assert not shortest_nonzero_path(split, 0, 3, algorithm=algo).found


def test_usage_errors():
    g = k_graph()
    with pytest.raises(UsageError):
        shortest_nonzero_path(g, 1, 1)
    with pytest.raises(UsageError):
        shortest_nonzero_path(g, 0, 3, algorithm="magic")
    with pytest.raises(UsageError):
        shortest_nonzero_path(g, 0, 3, forbidden=5)
    with pytest.raises(UsageError):
        sup_recursive(g, 1, 3, dijkstra(g, 0))


def test_integer_labels():
    g = LabeledGraph.from_edges(3, IntegerGroup(), [(0, 1, 1, 5), (1, 2, 1, -5), (0, 2, 4, 1)])
    assert shortest_nonzero_path(g, 0, 2).length == 4
    assert shortest_nonzero_path(g, 0, 2, forbidden=1).length == 2


@pytest.mark.parametrize("name", sorted(GROUPS))
@pytest.mark.parametrize("algo", ["fast", "recursive"])
def test_agrees_with_oracle(name, algo):
    G = GROUPS[name]
    rng = random.Random(31)
    for _ in range(150):
        g, s, t = random_instance(rng, G)
        forbidden = G.identity if rng.random() < 0.7 else G.random_element(rng)
        res = shortest_nonzero_path(g, s, t, forbidden=forbidden, algorithm=algo)
        want = oracle_shortest_path_with_label_constraint(g, s, t, forbidden)
        assert res.length == want
        if res.found:
            assert_witness(g, res.path, s, t, forbidden, want)


def test_claim1_depth_and_check_mode():
    rng = random.Random(12)
    for _ in range(200):
        g, s, tree = connected_instance(rng, GROUPS["Z2xZ3"], nmax=9, mmax=18)
        t = rng.choice([v for v in range(g.n) if v != s])
        stats = SolverStats()
        p = sup_recursive(g, s, t, tree, stats, check=True)
        assert max(stats.edge_counts) <= 2 * g.m
        assert stats.depth - 1 <= g.n - 1  # shrinks performed
        assert all(a > b for a, b in zip(stats.vertex_counts, stats.vertex_counts[1:]))
        want = unorthodox_distances(g, tree)[t]
        assert (p is None and want is None) or g.walk_length(p) == want
