import random

import pytest

from matchgraph import (
    CapacityError,
    Graph,
    Matching,
    edge_subset_has_r_matching,
    enumerate_matchings,
    has_r_matching,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_disjoint_matching,
    matching_number,
    max_matching,
    tutte_berge,
)

from tests.oracles import (
    brute_has_r_matching,
    brute_matchings,
    line_graph_independent_count,
    nx_matching_size,
    random_graph,
)
from tests.test_graphs import PETERSEN


def test_matching_type_invariants():
    c4 = make_cycle(4)
    m = Matching(c4, (2, 0))
    assert m.edges == (0, 2)
    with pytest.raises(ValueError):
        Matching(c4, (0, 1))  # share vertex 1
    with pytest.raises(ValueError):
        Matching(c4, (7,))


def test_max_matching_examples():
    assert len(max_matching(make_cycle(5))) == 2
    assert len(max_matching(make_complete_bipartite(4, 3))) == 3
    assert len(max_matching(PETERSEN)) == 5
    assert len(max_matching(Graph(3, ()))) == 0


def test_max_matching_is_a_matching_and_optimal_vs_networkx():
    rng = random.Random(97)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        mine = max_matching(g)
        Matching(g, mine.edges)  # revalidates disjointness
        assert len(mine) == nx_matching_size(g)


def test_tutte_berge_examples():
    w = tutte_berge(make_complete_bipartite(1, 3))
    assert w.s == frozenset({0}) and w.nu == 1
    w = tutte_berge(make_cycle(6))
    assert w.s == frozenset() and w.nu == 3
    w = tutte_berge(make_complete(3))
    assert w.s == frozenset() and w.nu == 1 and w.deficiency == 1


def test_tutte_berge_equality_random():
    rng = random.Random(13)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        w = tutte_berge(g)
        assert w.nu == matching_number(g)
        # the witness value really is what the formula says
        from matchgraph import odd_components

        o = odd_components(g, w.s)
        assert (g.n - o + len(w.s)) // 2 == w.nu
        assert w.deficiency == o - len(w.s)


def test_tutte_berge_capacity():
    with pytest.raises(CapacityError):
        tutte_berge(make_cycle(25))
    assert tutte_berge(make_cycle(21), max_n=21).nu == 10


def test_enumerate_matchings_examples():
    assert len(enumerate_matchings(make_cycle(5), 2)) == 5
    assert len(enumerate_matchings(make_cycle(7), 3)) == 7
    assert enumerate_matchings(Graph(2, ((0, 1),)), 2) == []
    with pytest.raises(ValueError):
        enumerate_matchings(make_cycle(5), 0)


def test_enumerate_matchings_lex_and_complete():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        r = rng.randint(1, 3)
        mine = [m.edges for m in enumerate_matchings(g, r)]
        assert mine == sorted(mine)
        assert mine == brute_matchings(g, r)


def test_enumeration_count_equals_line_graph_independent_sets():
    for g, r in [(make_cycle(6), 2), (make_complete(5), 2), (make_complete_bipartite(3, 3), 3)]:
        assert len(enumerate_matchings(g, r)) == line_graph_independent_count(g, r)


def test_has_r_matching_examples():
    p4 = Graph(4, ((0, 1), (1, 2), (2, 3)))  # C4 minus an edge
    assert has_r_matching(p4, 2)
    assert not has_r_matching(make_complete_bipartite(1, 5), 2)
    assert has_r_matching(make_cycle(9), 4)
    assert not has_r_matching(make_cycle(9), 5)
    assert has_r_matching(make_cycle(9), 0)


def test_has_r_matching_agrees_with_max_matching():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        nu = matching_number(g)
        for r in range(0, nu + 2):
            assert has_r_matching(g, r) == (nu >= r)


def test_edge_subset_has_r_matching():
    rng = random.Random(77)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), 0.6)
        if g.m == 0:
            continue
        ids = rng.sample(range(g.m), rng.randint(0, g.m))
        for r in (1, 2, 3):
            assert edge_subset_has_r_matching(g, ids, r) == brute_has_r_matching(g, ids, r)
