import random

import pytest

from nonzero_paths import shortest_nonzero_cycle
from nonzero_paths.errors import StructuralError
from nonzero_paths.instance import random_graph
from nonzero_paths.groups import CyclicGroup
from nonzero_paths.oracle import enumerate_simple_cycles, enumerate_st_paths
from nonzero_paths.reductions import (
    RotationSystem,
    face_boundary_span,
    homology_labeling,
    parity_labeling,
    shortest_even_path,
    shortest_odd_path,
    toroidal_grid,
)


def test_parity_small_example():
    # triangle 0-1-2 plus a pendant 2-3
    g = parity_labeling(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)])
    assert shortest_odd_path(g, 0, 2).length == 1
    assert shortest_even_path(g, 0, 2).length == 2
    assert shortest_even_path(g, 0, 3).length == 2
    assert shortest_odd_path(g, 0, 3).length == 3


def test_bipartite_has_no_odd_closed_path_between_same_side():
    g = parity_labeling(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert not shortest_odd_path(g, 0, 2).found


@pytest.mark.parametrize("algo", ["fast", "recursive"])
def test_parity_against_brute_force(algo):
    rng = random.Random(53)
    for _ in range(120):
        base = random_graph(rng, rng.randint(2, 8), rng.randint(0, 14), CyclicGroup(2))
        g = parity_labeling(base.n, [(e.tail, e.head, e.length) for e in base.edges])
        s, t = rng.sample(range(g.n), 2)
        best = {0: None, 1: None}
        for walk, length, _ in enumerate_st_paths(g, s, t):
            par = len(walk) % 2
            if best[par] is None or length < best[par]:
                best[par] = length
        assert shortest_odd_path(g, s, t, algo).length == best[1]
        assert shortest_even_path(g, s, t, algo).length == best[0]


def test_torus_3x3():
    rs = toroidal_grid(3, 3)
    assert rs.n - len(rs.edges) + len(rs.faces()) == 0
    assert rs.genus == 1
    hl = homology_labeling(rs)
    assert len(hl.leftover) == 2
    res = shortest_nonzero_cycle(hl.graph)
    assert res.length == 3
    assert frozenset(res.cycle.edges) not in face_boundary_span(rs)


def planar_k4():
    edges = ((0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (2, 3, 1), (3, 1, 1))
    rotations = ((0, 1, 2), (3, 0, 5), (4, 1, 3), (5, 2, 4))
    return RotationSystem(4, edges, rotations)


def test_planar_embedding_has_no_leftover_edges():
    rs = planar_k4()
    assert rs.genus == 0 and len(rs.faces()) == 4
    hl = homology_labeling(rs)
    assert hl.leftover == ()
    assert not shortest_nonzero_cycle(hl.graph).found


def random_rotation_system(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    g = random_graph(rng, n, rng.randint(n - 1, 12), CyclicGroup(2), 3, connected=True)
    rotations = []
    for v in range(n):
        ids = [eid for eid, _ in g.adjacency[v]]
        rng.shuffle(ids)
        rotations.append(tuple(ids))
    return RotationSystem(n, tuple((e.tail, e.head, e.length) for e in g.edges), tuple(rotations))


@pytest.mark.parametrize(
    "rs",
    [toroidal_grid(3, 3), toroidal_grid(2, 3), planar_k4()] + [random_rotation_system(i) for i in range(25)],
    ids=["torus3x3", "torus2x3", "planar_k4"] + [f"random{i}" for i in range(25)],
)
def test_homology_soundness(rs):
    span = face_boundary_span(rs)
    hl = homology_labeling(rs)
    g = hl.graph
    assert rs.n - len(rs.edges) + len(rs.faces()) == 2 - 2 * rs.genus
    count = 0
    for cyc, _, label in enumerate_simple_cycles(g):
        assert (label == g.group.identity) == (frozenset(cyc.edges) in span)
        count += 1
    assert count > 0 or len(rs.edges) == rs.n - 1  # only trees have no cycles


def test_rotation_system_validation():
    with pytest.raises(StructuralError):
        RotationSystem(2, ((0, 1, 1),), ((0,), ()))
    with pytest.raises(StructuralError):
        RotationSystem(3, ((0, 1, 1),), ((0,), (0,), ()))
    with pytest.raises(StructuralError):
        RotationSystem(1, ((0, 0, 1),), ((0, 0),))


@pytest.mark.parametrize("seed", range(15))
def test_face_boundaries_are_zero_and_cycle_is_minimal(seed):
    rs = random_rotation_system(seed)
    g = homology_labeling(rs).graph
    for face in rs.faces():
        acc = g.group.identity
        for eid, frm in face:
            acc = g.group.op(acc, g.directed_label(eid, frm))
        assert acc == g.group.identity
    span = face_boundary_span(rs)
    lengths = [length for cyc, length, _ in enumerate_simple_cycles(g) if frozenset(cyc.edges) not in span]
    res = shortest_nonzero_cycle(g)
    assert res.length == (min(lengths) if lengths else None)
