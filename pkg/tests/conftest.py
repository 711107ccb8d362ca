"""Shared corpus helpers: seeded graphs and definitional brute-force checks."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from epa.certify import induces_pattern
from epa.graphs import Graph
from epa.generator import random_connected_graph, random_graph, random_weights

DENSITIES = (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))


def corpus(count: int, n_lo: int, n_hi: int, seed0: int = 0):
    """Deterministic mixed-density random graphs, sizes cycling n_lo..n_hi."""
    out = []
    for i in range(count):
        n = n_lo + i % (n_hi - n_lo + 1)
        d = DENSITIES[i % len(DENSITIES)]
        out.append(random_graph(n, d, seed0 + i))
    return out


def connected_corpus(count: int, n_lo: int, n_hi: int, seed0: int = 0):
    out = []
    for i in range(count):
        n = max(1, n_lo + i % (n_hi - n_lo + 1))
        d = DENSITIES[i % len(DENSITIES)]
        out.append(random_connected_graph(n, d, seed0 + i))
    return out


def weights_for(g: Graph, seed: int, unit: bool):
    from epa.graphs import unit_weights

    return unit_weights(g.n) if unit else random_weights(g.n, seed)


# -- definitional class membership (independent of the recognizers) ----


def _components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        comps.append(comp)
    return comps


def brute_member(g: Graph, cls: str) -> bool:
    """Membership straight from the definitions, by exhaustion."""
    if cls == "edgeless":
        return g.m == 0
    if cls == "forest":
        return g.m == g.n - len(_components(g))
    if cls == "bipartite":
        for mask in range(1 << g.n):
            if all((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges()):
                return True
        return g.n == 0
    if cls == "cluster":
        return all(
            g.has_edge(u, v)
            for comp in _components(g)
            for u in comp
            for v in comp
            if u < v
        )
    if cls == "cocluster":
        return brute_member(g.complement(), "cluster")
    if cls == "cograph":
        return not any(induces_pattern(g, c, "P4") for c in combinations(range(g.n), 4))
    if cls == "split":
        for mask in range(1 << g.n):
            cl = [v for v in range(g.n) if mask >> v & 1]
            ind = [v for v in range(g.n) if not mask >> v & 1]
            if all(g.has_edge(u, v) for i, u in enumerate(cl) for v in cl[i + 1 :]) and not any(
                g.has_edge(u, v) for i, u in enumerate(ind) for v in ind[i + 1 :]
            ):
                return True
        return False
    if cls == "chordal":
        return not any(
            induces_pattern(g, c, "hole")
            for k in range(4, g.n + 1)
            for c in combinations(range(g.n), k)
        )
    if cls == "cochordal":
        return brute_member(g.complement(), "chordal")
    if cls == "triangle-free":
        return not any(induces_pattern(g, c, "triangle") for c in combinations(range(g.n), 3))
    if cls == "co-triangle-free":
        return not any(induces_pattern(g, c, "K3bar") for c in combinations(range(g.n), 3))
    if cls == "p3k1-free":
        return not any(induces_pattern(g, c, "P3+K1") for c in combinations(range(g.n), 4))
    raise ValueError(cls)
