"""Coloring algorithms whose color counts degrade additively with the
distance to a tractable class.

None of the algorithms receives a modulator; the guarantees (tested
against brute-force oracles) are

* class-oracle greedy: at most c + k colors, k the smallest modulator to
  the oracle's class,
* reverse degeneracy greedy: at most chi(G-M) + |M| for every chordal
  modulator M,
* maximal-independent-set greedy: at most chi(G-M) + |M| for cograph M
  and 2*chi(G-M) + |M| - 1 for cochordal M,
* the two-phase routine: at most chi(G-M) + |M| for (P3+K1)-free M.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .certify import is_proper_coloring
from .graphs import Graph, bits, mask_of
from .recognize import find_induced
from .solvers import max_matching


@dataclass(frozen=True)
class ColoringSol:
    colors: tuple[int, ...]          # 1-based, contiguous 1..colors_used
    colors_used: int
    algorithm: str


def _normalized(colors: Sequence[int], algorithm: str) -> ColoringSol:
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap) + 1
        out.append(remap[c])
    return ColoringSol(tuple(out), len(remap), algorithm)


@dataclass(frozen=True)
class ClassColoringOracle:
    """A c-coloring attempt for some graph class.

    On members of the class the attempt must be a valid coloring with at
    most ``budget`` colors; on other graphs it may return anything (the
    caller always validates)."""

    name: str
    budget: int
    attempt: Callable[[Graph], tuple[int, ...]]


def bipartite_oracle() -> ClassColoringOracle:
    def attempt(g: Graph) -> tuple[int, ...]:
        colors = [0] * g.n
        for s in range(g.n):
            if colors[s]:
                continue
            colors[s] = 1
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                for v in g.adj[u]:
                    if not colors[v]:
                        colors[v] = 3 - colors[u]
                        queue.append(v)
        return tuple(colors)

    return ClassColoringOracle("bipartite", 2, attempt)


def degeneracy_oracle(budget: int = 6) -> ClassColoringOracle:
    """Greedy coloring along the reverse degeneracy order, clamped to the
    budget.  Valid on graphs of degeneracy < budget (so in particular on
    planar graphs with budget 6); a weaker stand-in for an exact planar
    4-coloring."""

    def attempt(g: Graph) -> tuple[int, ...]:
        raw = _degeneracy_greedy(g)
        return tuple((c - 1) % budget + 1 for c in raw)

    return ClassColoringOracle(f"degeneracy<{budget}", budget, attempt)


def color_with_class_oracle(g: Graph, oracle: ClassColoringOracle) -> ColoringSol:
    """Color with at most c + k colors, k the least modulator to the
    oracle's class.

    Vertices are processed in id order.  Each new vertex first tries, for
    every c-subset S of the palette in lexicographic order, to recolor
    the S-colored prefix plus itself through the class oracle (remapped
    into S); only if all attempts fail a fresh color opens.
    """
    n = g.n
    c = oracle.budget
    colors = [0] * n
    opened = 0
    for i in range(n):
        placed = False
        for subset in combinations(range(1, opened + 1), c):
            chosen = [v for v in range(i) if colors[v] in subset] + [i]
            sub, old = g.induced_subgraph(chosen)
            attempt = oracle.attempt(sub)
            if (
                len(attempt) == sub.n
                and all(1 <= x <= c for x in attempt)
                and is_proper_coloring(sub, attempt)
            ):
                palette = sorted(subset)
                for new_id, v in enumerate(old):
                    colors[v] = palette[attempt[new_id] - 1]
                placed = True
                break
        if not placed:
            opened += 1
            colors[i] = opened
    return _normalized(colors, f"col-oracle[{oracle.name}]")


# ---------------------------------------------------------------------


def _degeneracy_greedy(g: Graph) -> list[int]:
    order, _ = g.degeneracy_order()
    colors = [0] * g.n
    for v in reversed(order):
        used = {colors[u] for u in g.adj[v] if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors


def color_degeneracy(g: Graph) -> ColoringSol:
    """Greedy along the reverse min-degree removal order: at most
    degeneracy + 1 colors, hence at most chi(G-M) + |M| for every chordal
    modulator M."""
    return _normalized(_degeneracy_greedy(g), "col-degeneracy")


def _greedy_mis(g: Graph, mask: int) -> int:
    """Lexicographically greedy maximal independent set inside ``mask``."""
    chosen = 0
    blocked = 0
    for v in bits(mask):
        if blocked >> v & 1:
            continue
        chosen |= 1 << v
        blocked |= (1 << v) | g.adj_bits[v]
    return chosen


def color_greedy_mis(g: Graph) -> ColoringSol:
    """One color per greedily extracted maximal independent set."""
    colors = [0] * g.n
    remaining = g.full_mask
    used = 0
    while remaining:
        ind = _greedy_mis(g, remaining)
        used += 1
        for v in bits(ind):
            colors[v] = used
        remaining &= ~ind
    return _normalized(colors, "col-greedy-mis")


def color_p3k1free(g: Graph) -> ColoringSol:
    """Two phases: big maximal independent sets first, then pairs from a
    maximum matching in the complement.

    Phase one repeatedly finds an independent triple, grows it to a
    maximal independent set, and spends one color on it.  Once no triple
    remains, color classes have size at most two, and matched complement
    pairs plus singletons are optimal on that remainder.
    """
    colors = [0] * g.n
    remaining = g.full_mask
    used = 0
    while True:
        triple = find_induced(g, "K3bar", within=remaining)
        if triple is None:
            break
        ind = mask_of(triple)
        blocked = ind
        for v in triple:
            blocked |= g.adj_bits[v]
        cand = remaining & ~blocked
        while cand:
            v = (cand & -cand).bit_length() - 1
            ind |= 1 << v
            blocked |= (1 << v) | g.adj_bits[v]
            cand = remaining & ~blocked & ~((1 << (v + 1)) - 1)
        used += 1
        for v in bits(ind):
            colors[v] = used
        remaining &= ~ind
    rest = sorted(bits(remaining))
    if rest:
        sub, old = g.induced_subgraph(rest)
        co = sub.complement()
        matching = sorted(max_matching(co))
        matched = set()
        for u, v in matching:
            used += 1
            colors[old[u]] = used
            colors[old[v]] = used
            matched.update((u, v))
        for v in range(sub.n):
            if v not in matched:
                used += 1
                colors[old[v]] = used
    return _normalized(colors, "col-p3k1free")
