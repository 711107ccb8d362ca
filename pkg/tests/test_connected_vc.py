from fractions import Fraction
from itertools import combinations

import pytest

from epa.certify import is_connected_vertex_cover
from epa.connected_vc import (
    connected_subsets,
    cvc_budgeted,
    cvc_small_after_contraction,
    cvc_split,
)
from epa.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    mask_of,
    path_graph,
    star_graph,
)
from epa.generator import GeneratorSpec, generate
from epa.oracle import exact_min_cvc, exact_min_modulator, exact_min_vc
from epa.vertex_cover import two_maximal_clique
from conftest import connected_corpus, corpus


def test_connected_subsets_match_bruteforce():
    for g in corpus(30, 1, 8, seed0=2900):
        for k in range(0, min(g.n, 5) + 1):
            got = sorted(connected_subsets(g, k))
            expect = sorted(
                mask_of(c)
                for c in combinations(range(g.n), k)
                if g.induces_connected(c)
            )
            assert got == expect, (k, sorted(g.edges()))


def test_cvc_budgeted_examples():
    # an optimum within the budget is found exactly
    p4 = path_graph(4)
    assert cvc_budgeted(p4, 2).size == 2
    # c = 0 keeps the Savage guarantee
    c5 = cycle_graph(5)
    sol = cvc_budgeted(c5, 0)
    assert is_connected_vertex_cover(c5, sol.cover)
    assert sol.size <= exact_min_cvc(c5)[0] + exact_min_vc(c5)[0]
    with pytest.raises(ValueError):
        cvc_budgeted(disjoint_union(complete_graph(2), complete_graph(2)), 1)


def test_cvc_budgeted_bound_corpus():
    for g in connected_corpus(50, 1, 10, seed0=3000):
        opt_cvc = exact_min_cvc(g)[0]
        opt_vc = exact_min_vc(g)[0]
        for c in (0, 2, 4):
            sol = cvc_budgeted(g, c)
            assert is_connected_vertex_cover(g, sol.cover)
            assert sol.size <= max(opt_cvc, opt_cvc + opt_vc - c)


def test_cvc_small_after_contraction_examples():
    k4 = complete_graph(4)
    sol = cvc_small_after_contraction(k4, frozenset(range(4)), 3)
    assert sol.size == 3
    p4 = path_graph(4)
    sol = cvc_small_after_contraction(p4, frozenset({1, 2}), 3)
    assert sol.cover == frozenset({1, 2})
    k5 = complete_graph(5)
    sol = cvc_small_after_contraction(k5, frozenset(range(5)), 3)
    assert sol.size == 4


def test_cvc_small_after_contraction_is_exact():
    for i, g in enumerate(connected_corpus(40, 2, 9, seed0=3100)):
        z = two_maximal_clique(g)
        con = g.contract_with_pendant(z)
        opt_contracted, _ = exact_min_cvc(con.graph)
        sol = cvc_small_after_contraction(g, z, max(3, opt_contracted))
        assert is_connected_vertex_cover(g, sol.cover)
        assert sol.size == exact_min_cvc(g)[0]


def test_cvc_small_budget_violation_detected():
    # a long path's contraction still needs a big cover
    p = path_graph(10)
    with pytest.raises(ValueError):
        cvc_small_after_contraction(p, frozenset({0, 1}), 1)


def test_contraction_lemma_invariants():
    # contracting a clique: OPT_CVC drops by at least |Z| - 2, and the
    # split modulator shrinks by |Z ∩ M| - 1 (witness: (M \ Z) ∪ {v});
    # the stronger "- 1 whenever Z merely intersects M" fails, e.g. on a
    # C5 with a pendant path merged by the contraction into a C4
    for g in connected_corpus(40, 2, 9, seed0=3200):
        z = two_maximal_clique(g)
        con = g.contract_with_pendant(z)
        assert exact_min_cvc(con.graph)[0] <= exact_min_cvc(g)[0] - len(z) + 2
        k, mod = exact_min_modulator(g, "split")
        hit = len(mod & z)
        if len(z) >= 2 and hit:
            assert exact_min_modulator(con.graph, "split")[0] <= k - hit + 1
        if len(z) >= 2 and z <= mod:
            assert exact_min_modulator(con.graph, "split")[0] <= k - 1


def test_contraction_intersection_alone_is_not_enough():
    # concrete counterexample to the "-1 on any intersection" reading:
    # contracting the 2-maximal edge {0, 1} of this graph turns its C5
    # into an induced C4, so one deletion is still needed afterwards
    g = Graph(6, [(0, 1), (0, 2), (0, 5), (1, 3), (2, 4), (3, 4), (3, 5)])
    z = frozenset({0, 1})
    k, mods = exact_min_modulator(g, "split")
    assert k == 1
    con = g.contract_with_pendant(z)
    assert exact_min_modulator(con.graph, "split")[0] == 1


def test_clique_in_split_has_small_contracted_cover():
    for i in range(40):
        g, _ = generate(GeneratorSpec("split", 12, 0, Fraction(1, 2), 3300 + i))
        z = two_maximal_clique(g)
        con = g.contract_with_pendant(z)
        assert exact_min_vc(con.graph)[0] <= 2


def test_cvc_split_examples():
    assert cvc_split(path_graph(4)).cover == frozenset({1, 2})
    assert cvc_split(Graph(1, [])).cover == frozenset()
    with pytest.raises(ValueError):
        cvc_split(disjoint_union(complete_graph(2), complete_graph(2)))


def test_cvc_split_exact_on_connected_splits():
    found = 0
    i = 0
    while found < 30 and i < 200:
        g, _ = generate(GeneratorSpec("split", 10, 0, Fraction(3, 5), 3400 + i))
        i += 1
        if not g.is_connected():
            continue
        found += 1
        sol = cvc_split(g)
        assert is_connected_vertex_cover(g, sol.cover)
        assert sol.size == exact_min_cvc(g)[0]
    assert found == 30


def test_cvc_split_bound_corpus():
    for g in connected_corpus(60, 1, 10, seed0=3500):
        sol = cvc_split(g)
        assert is_connected_vertex_cover(g, sol.cover)
        opt = exact_min_cvc(g)[0]
        k = exact_min_modulator(g, "split")[0]
        assert sol.size <= opt + k, sorted(g.edges())


def test_cvc_split_terminates_on_adversarial_shapes():
    # paths, cycles, stars and brooms drive the contraction into its
    # no-shrink regimes; termination relies on the clique choice
    for g in [path_graph(12), cycle_graph(12), star_graph(9)]:
        sol = cvc_split(g)
        assert is_connected_vertex_cover(g, sol.cover)
    broom = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6), (3, 7)])
    sol = cvc_split(broom)
    assert is_connected_vertex_cover(broom, sol.cover)
