from fractions import Fraction

import pytest

from epa.graphs import (
    Graph,
    as_weights,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from conftest import corpus


def test_rejects_self_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_adjacency_sorted_and_symmetric():
    g = Graph(4, [(2, 0), (3, 1), (0, 1)])
    assert g.adj[0] == (1, 2)
    for u in range(4):
        for v in g.adj[u]:
            assert u in g.adj[v]


def test_complement_examples():
    assert complete_graph(3).complement() == empty_graph(3)
    p4 = path_graph(4)
    assert p4.complement().complement() == p4
    c5 = cycle_graph(5)
    # C5 is self-complementary up to relabeling: same degree sequence, 5 edges
    assert c5.complement().m == 5
    assert sorted(c5.complement().degree(v) for v in range(5)) == [2] * 5


def test_complement_involution_corpus():
    for g in corpus(60, 1, 10, seed0=300):
        assert g.complement().complement() == g


def test_induced_subgraph_edge_set():
    for g in corpus(40, 2, 9, seed0=400):
        for sub in ([0, 1], list(range(g.n))[::2], list(range(g.n))):
            h, old = g.induced_subgraph(sub)
            expect = {(min(old[u], old[v]), max(old[u], old[v])) for u, v in h.edges()}
            direct = {
                (u, v) for u, v in g.edges() if u in set(sub) and v in set(sub)
            }
            assert expect == direct


def test_induced_subgraph_trivial_cases():
    c5 = cycle_graph(5)
    p3, _ = c5.induced_subgraph([0, 1, 2])
    assert p3.m == 2
    whole, _ = c5.induced_subgraph(range(5))
    assert whole == c5
    k2, _ = complete_graph(4).induced_subgraph([1, 3])
    assert k2 == complete_graph(2)


def test_contract_with_pendant():
    k3 = complete_graph(3)
    con = k3.contract_with_pendant({0, 1, 2})
    assert con.graph == Graph(2, [(0, 1)])
    assert con.graph.degree(con.leaf) == 1

    p3 = path_graph(3)
    con = p3.contract_with_pendant({0})
    assert con.graph.n == 4
    assert sorted(con.graph.edges()) == [(0, 1), (0, 2), (2, 3)]

    p4 = path_graph(4)
    con = p4.contract_with_pendant({1, 2})
    assert con.graph.n == 4
    assert con.graph == star_graph(3).__class__(4, [(0, 2), (1, 2), (2, 3)])


def test_contract_size_and_leaf_degree_corpus():
    for i, g in enumerate(corpus(40, 2, 9, seed0=500)):
        y = set(range(0, g.n, 2)) if i % 2 else {i % g.n}
        con = g.contract_with_pendant(y)
        assert con.graph.n == g.n - len(y) + 2
        assert con.graph.degree(con.leaf) == 1
        assert con.graph.adj[con.leaf] == (con.vertex,)


def test_contract_empty_rejected():
    with pytest.raises(ValueError):
        path_graph(3).contract_with_pendant(set())


def brute_degeneracy(g: Graph) -> int:
    best = 0
    for mask in range(1, 1 << g.n):
        sub = [v for v in range(g.n) if mask >> v & 1]
        best = max(best, min((g.adj_bits[v] & mask).bit_count() for v in sub))
    return best


def test_degeneracy_examples():
    assert path_graph(7).degeneracy_order()[1] == 1
    assert complete_graph(5).degeneracy_order()[1] == 4
    assert cycle_graph(4).degeneracy_order()[1] == 2 == brute_degeneracy(cycle_graph(4))


def test_degeneracy_matches_definition_corpus():
    for g in corpus(40, 1, 8, seed0=600):
        order, val = g.degeneracy_order()
        assert sorted(order) == list(range(g.n))
        assert val == brute_degeneracy(g) if g.n else val == 0


def test_connected_components():
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert sorted(len(c) for c in g.connected_components()) == [2, 3]
    assert len(empty_graph(4).connected_components()) == 4
    assert cycle_graph(5).is_connected()


def test_weights_validation():
    assert as_weights([1, "3/2"], 2) == (Fraction(1), Fraction(3, 2))
    with pytest.raises(ValueError):
        as_weights([1], 2)
    with pytest.raises(ValueError):
        as_weights([-1, 1], 2)
