import random

import pytest

from matchgraph import (
    CertificateError,
    Graph,
    chromatic_number,
    coloring_from_extremal,
    export_dimacs,
    extend_bipartite_matching_coloring,
    greedy_clique,
    is_proper,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_disjoint_matching,
    matching_graph,
    star_lower_bound,
    turan_matchings,
)

from tests.oracles import chromatic_by_backtracking, random_graph


def test_chromatic_examples():
    assert chromatic_number(make_cycle(5)).chi == 3
    assert chromatic_number(matching_graph(make_cycle(7), 2)).chi == 5
    assert chromatic_number(matching_graph(make_disjoint_matching(4), 2)).chi == 2
    assert chromatic_number(Graph(0, ())).chi == 0
    assert chromatic_number(Graph(3, ())).chi == 1


def test_certificate_contents():
    cert = chromatic_number(make_complete(4))
    assert cert.chi == 4 and cert.exact
    assert cert.lower_witness[0] == "clique" and len(cert.lower_witness[1]) == 4
    assert is_proper(make_complete(4), cert.coloring)
    # colors are canonical: first occurrences are 0, 1, 2, ...
    seen = []
    for c in cert.coloring:
        if c not in seen:
            seen.append(c)
    assert seen == sorted(seen)


def test_solver_agrees_with_backtracking_oracle():
    rng = random.Random(101)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        cert = chromatic_number(g)
        assert cert.exact
        assert cert.chi == chromatic_by_backtracking(g)
        assert is_proper(g, cert.coloring)
        assert len(set(cert.coloring)) == cert.chi


def test_solver_budget_interval_is_sound():
    g = matching_graph(make_complete(6), 2).graph
    cert = chromatic_number(g, node_budget=3)
    assert not cert.exact and cert.chi is None
    full = chromatic_number(g)
    assert full.exact
    assert cert.bounds[0] <= full.chi <= cert.bounds[1]


def test_solver_value_deterministic():
    g = matching_graph(make_complete_bipartite(3, 3), 2).graph
    a = chromatic_number(g)
    b = chromatic_number(g)
    assert a.chi == b.chi == chromatic_by_backtracking(g)


def test_known_lower_short_circuits():
    g = matching_graph(make_complete_bipartite(6, 4), 2)
    k64 = make_complete_bipartite(6, 4)
    init = coloring_from_extremal(k64, 2, star_lower_bound(k64, 2)[1])
    cert = chromatic_number(g, known_lower=18, known_lower_label="alternation bound",
                            initial_coloring=init)
    assert cert.chi == 18 and cert.exact
    assert cert.lower_witness == ("external", "alternation bound")


def test_is_proper():
    assert is_proper(make_cycle(4), (0, 1, 0, 1))
    assert not is_proper(make_complete(3), (0, 1, 0))
    assert is_proper(Graph(3, ()), (0, 0, 0))
    with pytest.raises(ValueError):
        is_proper(make_cycle(4), (0, 1, 0))


def test_greedy_clique_is_clique():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        clique = greedy_clique(g)
        assert all(
            g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]
        )


def test_coloring_from_extremal_cycle():
    c5 = make_cycle(5)
    col = coloring_from_extremal(c5, 2, {0, 1})
    kg = matching_graph(c5, 2).graph
    assert is_proper(kg, col)
    assert len(set(col)) <= 5 - 2


def test_coloring_from_extremal_bipartite_star():
    k43 = make_complete_bipartite(4, 3)
    star = star_lower_bound(k43, 2)[1]
    assert len(star) == 4
    col = coloring_from_extremal(k43, 2, star)
    kg = matching_graph(k43, 2).graph
    assert is_proper(kg, col)
    assert len(set(col)) == 8


def test_coloring_from_extremal_rejections():
    c5 = make_cycle(5)
    with pytest.raises(CertificateError):
        coloring_from_extremal(c5, 2, {0, 2})  # contains a 2-matching
    with pytest.raises(CertificateError):
        coloring_from_extremal(c5, 1, {0})  # a single edge is a 1-matching
    # the empty set is the only 1K2-free set; it colors KG(G, K2) injectively
    col = coloring_from_extremal(c5, 1, set())
    assert is_proper(matching_graph(c5, 1).graph, col)
    assert len(set(col)) == 5


def test_chi_at_most_edges_minus_ex():
    rng = random.Random(43)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        if g.m == 0:
            continue
        r = rng.randint(1, 2)
        ex = turan_matchings(g, r)
        kg = matching_graph(g, r)
        chi = chromatic_number(kg).chi
        assert chi <= g.m - ex.ex_value
        col = coloring_from_extremal(g, r, ex.extremal_edges)
        assert is_proper(kg.graph, col)


def test_extend_bipartite_matching_coloring():
    for (m, n, r) in [(3, 2, 2), (4, 3, 2), (3, 3, 2)]:
        small = make_complete_bipartite(m, n)
        cert = chromatic_number(matching_graph(small, r))
        extended = extend_bipartite_matching_coloring(m, n, r, cert.coloring)
        big_kg = matching_graph(make_complete_bipartite(m, m), r).graph
        assert is_proper(big_kg, extended)
        assert len(set(extended)) <= cert.chi + (m - n) * m


def test_export_dimacs():
    text = export_dimacs(make_cycle(3))
    assert text == "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
