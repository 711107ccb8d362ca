from fractions import Fraction
from itertools import combinations

import pytest

from epa.certify import is_proper_coloring, is_triangle_packing, is_vertex_cover
from epa.graphs import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from epa.oracle import (
    BudgetExceeded,
    OracleBudget,
    exact_chromatic,
    exact_lp_vc,
    exact_max_matching_size,
    exact_max_tp,
    exact_min_cvc,
    exact_min_modulator,
    exact_min_wvc,
)
from epa.recognize import recognize
from conftest import corpus, weights_for


def test_wvc_examples():
    assert exact_min_wvc(path_graph(3))[0] == 1
    assert exact_min_wvc(cycle_graph(5))[0] == 3
    assert exact_min_wvc(complete_graph(4))[0] == 3
    w = (Fraction(1), Fraction(5), Fraction(1))
    val, cover = exact_min_wvc(path_graph(3), w)
    assert val == 2 and cover == frozenset({0, 2})


def test_cvc_examples():
    assert exact_min_cvc(star_graph(4))[0] == 1
    assert exact_min_cvc(path_graph(5))[0] == 3
    assert exact_min_cvc(complete_graph(2))[0] == 1
    with pytest.raises(ValueError):
        exact_min_cvc(disjoint_union(complete_graph(2), complete_graph(2)))


def test_chromatic_examples():
    assert exact_chromatic(cycle_graph(5))[0] == 3
    assert exact_chromatic(complete_graph(5))[0] == 5
    chi, colors = exact_chromatic(cycle_graph(6))
    assert chi == 2 and is_proper_coloring(cycle_graph(6), colors)


def test_tp_examples():
    assert exact_max_tp(complete_graph(6))[0] == 2
    assert exact_max_tp(cycle_graph(5))[0] == 0
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    size, tris = exact_max_tp(two_k3)
    assert size == 2 and is_triangle_packing(two_k3, tris)


def test_modulator_examples():
    assert exact_min_modulator(cycle_graph(5), "bipartite")[0] == 1
    assert exact_min_modulator(path_graph(3), "cluster")[0] == 1
    assert exact_min_modulator(cycle_graph(5), "split")[0] == 1
    assert exact_min_modulator(complete_graph(4), "edgeless")[0] == 3


def test_modulator_matches_recognizer_scan():
    # independent route: smallest deletion set the recognizers accept
    classes = (
        "edgeless", "cluster", "cocluster", "split", "chordal", "cochordal",
        "bipartite", "forest", "cograph", "p3k1-free", "triangle-free",
        "co-triangle-free",
    )
    for g in corpus(25, 1, 7, seed0=1100):
        for cls in classes:
            val, cert = exact_min_modulator(g, cls)
            best = None
            for k in range(g.n + 1):
                for combo in combinations(range(g.n), k):
                    rest, _ = g.induced_subgraph(set(range(g.n)) - set(combo))
                    if recognize(rest, cls).member:
                        best = k
                        break
                if best is not None:
                    break
            assert val == best
            rest, _ = g.induced_subgraph(set(range(g.n)) - set(cert))
            assert recognize(rest, cls).member


def test_weighted_modulator():
    w = (Fraction(10), Fraction(1, 2), Fraction(10))
    val, cert = exact_min_modulator(path_graph(3), "cluster", w)
    assert val == Fraction(1, 2) and cert == frozenset({1})


def test_lp_examples():
    assert exact_lp_vc(path_graph(2)) == 1
    assert exact_lp_vc(complete_graph(3)) == Fraction(3, 2)
    assert exact_lp_vc(star_graph(3)) == 1
    assert exact_lp_vc(star_graph(4)) == 1
    assert exact_lp_vc(cycle_graph(4)) == 2


def test_oracles_mutually_consistent():
    for i, g in enumerate(corpus(40, 1, 9, seed0=1200)):
        w = weights_for(g, 77 + i, unit=i % 2 == 0)
        wvc, cover = exact_min_wvc(g, w)
        assert is_vertex_cover(g, cover)
        assert exact_lp_vc(g, w) <= wvc
        for cls in ("cluster", "cocluster", "forest", "split"):
            assert exact_min_modulator(g, cls, w)[0] <= wvc
        chi, colors = exact_chromatic(g)
        assert is_proper_coloring(g, colors)
        # clique number lower-bounds the chromatic number
        omega = max(
            (len(c) for k in range(1, g.n + 1) for c in combinations(range(g.n), k)
             if all(g.has_edge(u, v) for u, v in combinations(c, 2))),
            default=0,
        )
        assert chi >= omega


def test_oracle_determinism():
    g = corpus(1, 9, 9, seed0=1300)[0]
    assert exact_min_wvc(g) == exact_min_wvc(g)
    assert exact_min_modulator(g, "split") == exact_min_modulator(g, "split")
    assert exact_max_tp(g) == exact_max_tp(g)


def test_budget_enforced():
    big = path_graph(13)
    with pytest.raises(BudgetExceeded):
        exact_min_wvc(big)
    with pytest.raises(BudgetExceeded):
        exact_min_modulator(path_graph(11), "forest")
    with pytest.raises(BudgetExceeded):
        exact_lp_vc(path_graph(11))
    tight = OracleBudget(vc=13)
    assert exact_min_wvc(big, budget=tight)[0] == 6


def test_matching_oracle():
    assert exact_max_matching_size(path_graph(4)) == 2
    assert exact_max_matching_size(complete_graph(3)) == 1
    assert exact_max_matching_size(cycle_graph(6)) == 3


def test_lp_matches_plain_python_enumeration():
    # guards the vectorized enumeration against an unoptimized loop
    from itertools import product

    for i, g in enumerate(corpus(30, 0, 6, seed0=1400)):
        w = weights_for(g, i, unit=i % 2 == 0)
        best = None
        for assign in product((Fraction(0), Fraction(1, 2), Fraction(1)), repeat=g.n):
            if all(assign[u] + assign[v] >= 1 for u, v in g.edges()):
                val = sum((w[v] * assign[v] for v in range(g.n)), Fraction(0))
                if best is None or val < best:
                    best = val
        if best is None:
            best = Fraction(0)
        assert exact_lp_vc(g, w) == best


def test_tp_oracle_matches_cluster_formula():
    from epa.generator import GeneratorSpec, generate

    for i in range(25):
        g, _ = generate(GeneratorSpec("cluster", 11, 0, Fraction(1, 2), 1450 + i))
        expect = sum(len(comp) // 3 for comp in g.connected_components())
        assert exact_max_tp(g)[0] == expect


def test_chromatic_known_families():
    from epa.graphs import Graph

    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    petersen = Graph(10, outer + inner + spokes)
    assert exact_chromatic(petersen)[0] == 3
    assert exact_chromatic(cycle_graph(7))[0] == 3
    assert exact_chromatic(cycle_graph(8))[0] == 2
