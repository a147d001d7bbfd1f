import random

import pytest

from oracles import brute_first_T, brute_independent_sets, random_edges

from indset.errors import InternalInvariantError, PreconditionError
from indset.graph_core import (
    Graph,
    bipartite_double_cover,
    complete_graph,
    cover_pair,
    cycle_graph,
    empty_graph,
    path_graph,
)
from indset.indset_count import enumerate_independent_sets
from indset.sweeps import check_injection
from indset.zhao_injection import (
    canonical_T,
    conflict_edges,
    is_cover_independent,
    verify_zhao_inequality,
    zhao_inverse,
    zhao_map,
)


def independent_sets(g):
    return [frozenset(s) for s in enumerate_independent_sets(g).vertex_sets()]


def test_conflict_edges_examples():
    k2 = complete_graph(2)
    assert conflict_edges(k2, [], []) == frozenset()
    assert conflict_edges(k2, [1], [2]) == {(1, 2)}
    assert conflict_edges(k2, [2], [1]) == {(1, 2)}
    g = path_graph(5)
    assert conflict_edges(g, [1, 3, 5], [1, 3, 5]) == frozenset()
    assert conflict_edges(g, [1, 3], [2, 4]) == {(1, 2), (2, 3), (3, 4)}


def test_conflict_edges_rejects_dependent_input():
    with pytest.raises(PreconditionError, match=r"edge \(1, 2\)"):
        conflict_edges(path_graph(3), [1, 2], [])


def test_canonical_T_examples():
    assert canonical_T(None, []) == frozenset()
    assert canonical_T(None, [(1, 2)]) == {1}
    assert canonical_T(None, [(1, 2), (2, 3)]) == {2}
    assert brute_first_T(3, [(1, 2), (2, 3)]) == {2}


def test_canonical_T_rejects_odd_cycle():
    with pytest.raises(InternalInvariantError):
        canonical_T(None, [(1, 2), (2, 3), (1, 3)])


def test_canonical_T_matches_exhaustive_scan():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(1, 9)
        side = {v: rng.randint(0, 1) for v in range(1, n + 1)}
        conflicts = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if side[u] != side[v] and rng.random() < 0.35
        ]
        assert canonical_T(None, conflicts) == brute_first_T(n, conflicts)


def test_canonical_T_independent_of_edge_order():
    rng = random.Random(1)
    edges = [(1, 4), (2, 4), (2, 5), (3, 6), (7, 8), (8, 9)]
    expected = canonical_T(None, edges)
    for _ in range(20):
        shuffled = edges[:]
        rng.shuffle(shuffled)
        flipped = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in shuffled]
        assert canonical_T(None, flipped) == expected


def test_zhao_map_examples():
    k2 = complete_graph(2)
    assert zhao_map(k2, [], []) == frozenset()
    assert zhao_map(k2, [1], [2]) == {(1, 1), (2, 1)}
    g = path_graph(4)
    # conflict edge (3, 4) gives T = {3}, so (3, 0) moves to (3, 1)
    assert zhao_map(g, [1, 3], [1, 4]) == {(1, 0), (1, 1), (3, 1), (4, 1)}


def test_zhao_inverse_examples():
    k2 = complete_graph(2)
    assert zhao_inverse(k2, []) == (frozenset(), frozenset())
    assert zhao_inverse(k2, [(1, 1), (2, 1)]) == ({1}, {2})
    assert zhao_inverse(k2, [(1, 0)]) == ({1}, frozenset())


def test_zhao_inverse_rejects_dependent_image():
    with pytest.raises(PreconditionError):
        zhao_inverse(complete_graph(2), [(1, 0), (2, 1)])


def test_zhao_inverse_reports_sets_outside_image():
    g = cycle_graph(3)
    cover, _ = bipartite_double_cover(g)
    outside = 0
    for s in enumerate_independent_sets(cover).vertex_sets():
        image = frozenset(cover_pair(x) for x in s)
        pre = zhao_inverse(g, image)
        if pre is None:
            outside += 1
        else:
            assert zhao_map(g, *pre) == image
    assert outside == 18 - 16


def test_verify_zhao_examples():
    assert verify_zhao_inequality(complete_graph(2)) == (9, 9, True)
    assert verify_zhao_inequality(cycle_graph(3)) == (16, 18, True)
    assert verify_zhao_inequality(empty_graph(3)) == (64, 64, True)


def test_zhao_counts_against_brute_force():
    for g in (cycle_graph(3), path_graph(4), complete_graph(4)):
        cover, _ = bipartite_double_cover(g)
        c = len(brute_independent_sets(g.n, sorted(g.edges)))
        cc = len(brute_independent_sets(cover.n, sorted(cover.edges)))
        assert verify_zhao_inequality(g) == (c * c, cc, c * c <= cc)


def test_exhaustive_injection_small_examples():
    for g in (complete_graph(3), path_graph(4), cycle_graph(5), empty_graph(3)):
        res = check_injection(g)
        assert res.passed, res


def test_images_are_independent_in_cover_adjacency():
    g = cycle_graph(5)
    cover, _ = bipartite_double_cover(g)
    sets = independent_sets(g)
    for s0 in sets:
        for s1 in sets:
            img = zhao_map(g, s0, s1)
            labels = [2 * (v - 1) + side + 1 for v, side in img]
            assert cover.is_independent(labels)
            assert is_cover_independent(g, img)


def test_roundtrip_on_random_graphs():
    rng = random.Random(17)
    for _ in range(500):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, random_edges(rng, n, rng.uniform(0.1, 0.7)))
        sets = independent_sets(g)
        for _ in range(4):
            s0, s1 = rng.choice(sets), rng.choice(sets)
            img = zhao_map(g, s0, s1)
            assert is_cover_independent(g, img)
            assert zhao_inverse(g, img) == (s0, s1)
