import pytest

from properties import LEMMA_CHECKS, run_check
from test_graph import k_graph

from nonzero_paths import dijkstra, expand, find_lowest_blossom, shrink, simplify
from nonzero_paths.blossom import detour_label, detour_length, detour_path
from nonzero_paths.errors import StructuralError, UsageError
from nonzero_paths.graph import LabeledGraph, Walk
from nonzero_paths.groups import CyclicGroup


@pytest.fixture
def k():
    g = k_graph()
    t = dijkstra(g, 0)
    return g, t, find_lowest_blossom(g, t)


def test_fixture_k_blossom(k):
    g, t, bl = k
    assert bl.edge == 2 and bl.base == 0
    assert bl.height == 1.5 and bl.closed_length == 3
    assert bl.members == {1, 2}
    assert bl.cycle.is_cycle() and g.walk_label(bl.cycle) == 1


def test_fixture_k_detours(k):
    g, t, bl = k
    qa, qb = detour_path(g, t, bl, 1), detour_path(g, t, bl, 2)
    assert qa.vertices == (0, 2, 1) and qb.vertices == (0, 1, 2)
    for w, q in ((1, qa), (2, qb)):
        assert g.walk_length(q) == detour_length(t, bl, w) == 2
        assert g.walk_label(q) == detour_label(g, t, bl, w) == 1


def test_fixture_k_shrink(k):
    g, t, bl = k
    sr = shrink(g, t, bl)
    h = sr.graph
    assert h.n == 2 and sr.vertex_map == (0, 3)
    assert sorted((e.length, e.label) for e in h.edges) == [(2, 0), (3, 1)]
    tree_edge = sr.tree.parent_edge[1]
    assert h.edges[tree_edge].length == 2
    other = 1 - tree_edge
    w = expand(sr, Walk((0, 1), (other,)))
    assert g.walk_length(w) == 3 and g.walk_label(w) == 1
    r = simplify(g, t, bl, w, 3)
    assert r.is_path() and g.walk_length(r) == 3


def test_simplify_rejects_orthodox_walk(k):
    g, t, bl = k
    with pytest.raises(StructuralError):
        simplify(g, t, bl, Walk((0, 1, 3), (0, 3)), 3)


def test_no_blossom_without_inconsistent_edges():
    g = k_graph()
    g = g.with_edges([e.__class__(e.id, e.tail, e.head, 0, e.length) for e in g.edges])
    assert find_lowest_blossom(g, dijkstra(g, 0)) is None


def test_lowest_of_two_blossoms():
    # triangles s-a-b (height 1.5) and s-c-d (height 2.0)
    g = LabeledGraph.from_edges(5, CyclicGroup(2), [
        (0, 1, 1, 0), (0, 2, 1, 0), (1, 2, 1, 1),
        (0, 3, 1, 0), (0, 4, 1, 0), (3, 4, 2, 1),
    ])
    bl = find_lowest_blossom(g, dijkstra(g, 0))
    assert bl.edge == 2 and bl.height == 1.5


def test_detour_rejects_base_and_outsiders(k):
    g, t, bl = k
    for w in (0, 3):
        with pytest.raises(UsageError):
            detour_path(g, t, bl, w)


def _k_with_tail():
    # Fixture K plus a vertex c hanging off s by two parallel edges
    edges = [(e.tail, e.head, e.length, e.label) for e in k_graph().edges]
    g = LabeledGraph.from_edges(5, CyclicGroup(2), edges + [(0, 4, 5, 0), (0, 4, 6, 1)])
    t = dijkstra(g, 0)
    return g, t, find_lowest_blossom(g, t)


def test_expand_leaves_copied_edges_alone():
    g, t, bl = _k_with_tail()
    sr = shrink(g, t, bl)
    c = sr.old_to_new[4]
    hits = [eid for eid, e in enumerate(sr.graph.edges) if {e.tail, e.head} == {sr.old_to_new[0], c}]
    assert hits
    for eid in hits:
        w = expand(sr, sr.graph.edge_walk(eid, sr.old_to_new[0]))
        assert w.vertices == (0, 4)
        assert g.walk_length(w) == sr.graph.edges[eid].length


def test_simplify_keeps_walk_off_the_blossom():
    g, t, bl = _k_with_tail()
    w = g.edge_walk(6, 0)
    assert g.walk_label(w) == 1
    assert simplify(g, t, bl, w, 4) == w


@pytest.mark.parametrize("name", [n for n in LEMMA_CHECKS if not n.startswith("Lemma 1")])
def test_lemma_property(name):
    run_check(LEMMA_CHECKS[name], 100, seed=sorted(LEMMA_CHECKS).index(name))
