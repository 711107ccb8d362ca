"""Vertex cover algorithms with additive guarantees.

Each routine returns a :class:`VertexCoverSol` whose cover is feasible by
construction and re-checked in tests by :mod:`epa.certify`.  The bounds
(`weight <= OPT + f(k)` with k a modulator weight/size the algorithm never
sees) are exercised against the brute-force oracles; see the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .graphs import Graph, Weights, bits, mask_of, total, unit_weights
from .recognize import find_induced
from .solvers import (
    fvs_2approx,
    lp_half_integral_vc,
    vc_2approx,
    wvc_cluster,
    wvc_cograph,
    wvc_forest,
)


@dataclass(frozen=True)
class VertexCoverSol:
    cover: frozenset[int]
    weight: Fraction
    algorithm: str
    depth: int = 0

    @property
    def size(self) -> int:
        return len(self.cover)


def _sol(g: Graph, w: Weights, cover: frozenset[int], algorithm: str, depth: int = 0) -> VertexCoverSol:
    return VertexCoverSol(cover, total(w, cover), algorithm, depth)


# ---------------------------------------------------------------------
# local ratio over a finite forbidden family


@dataclass(frozen=True)
class FFreeConfig:
    """A finite forbidden family with independence number 2, together
    with an exact weighted-vertex-cover solver for graphs avoiding it."""

    family: str                   # 'P3' | 'co-P3' | 'P4'
    alpha_star: int
    exact_solver: Callable[[Graph, Weights], frozenset[int]]


def ffree_config(family: str) -> FFreeConfig:
    if family == "P3":
        return FFreeConfig("P3", 2, wvc_cluster)
    if family == "co-P3":
        return FFreeConfig("co-P3", 2, wvc_cograph)
    if family == "P4":
        return FFreeConfig("P4", 2, wvc_cograph)
    raise ValueError(f"unsupported forbidden family {family!r}")


def vc_local_ratio_ffree(g: Graph, w: Weights, cfg: FFreeConfig) -> VertexCoverSol:
    """Cover of weight at most OPT plus alpha* times the lightest modulator
    to the family-free class.

    Loop: solve exactly once the alive graph is family-free; delete
    zero-weight vertices (re-adding them later only if an incident edge
    is still uncovered); otherwise uniformly reduce the weights on a
    found forbidden pattern by its minimum.
    """
    wp = list(w)
    alive = g.full_mask
    removed: list[tuple[int, int]] = []  # (vertex, neighbor mask at removal)
    depth = 0
    while True:
        zeros = [v for v in bits(alive) if wp[v] == 0]
        if zeros:
            v = zeros[0]
            removed.append((v, g.adj_bits[v] & alive))
            alive &= ~(1 << v)
            depth += 1
            continue
        pattern = find_induced(g, cfg.family, within=alive)
        if pattern is None:
            sub, old = g.induced_subgraph(bits(alive))
            sub_w = tuple(wp[v] for v in old)
            inner = cfg.exact_solver(sub, sub_w)
            cover = {old[v] for v in inner}
            break
        lam = min(wp[v] for v in pattern)
        for v in pattern:
            wp[v] -= lam
        depth += 1
    for v, nbrs in reversed(removed):
        if any(u not in cover for u in bits(nbrs)):
            cover.add(v)
    return _sol(g, w, frozenset(cover), f"vc-ffree[{cfg.family}]", depth)


# ---------------------------------------------------------------------
# feedback-vertex-set parameterized cover


def vc_fvs(g: Graph, w: Optional[Weights] = None) -> VertexCoverSol:
    """Cover of weight at most OPT_WVC + OPT_FVS.

    Pipeline: half-integral LP persistency keeps V1 and discards V0; a
    2-approximate feedback vertex set of the half part joins the cover;
    the remaining forest is solved exactly.
    """
    if w is None:
        w = unit_weights(g.n)
    lp = lp_half_integral_vc(g, w)
    cover = set(lp.v1)
    half, old = g.induced_subgraph(lp.v_half)
    half_w = tuple(w[v] for v in old)
    fvs = fvs_2approx(half, half_w)
    cover.update(old[v] for v in fvs)
    forest, fold = half.induced_subgraph(set(range(half.n)) - set(fvs))
    forest_w = tuple(half_w[v] for v in fold)
    tree_cover = wvc_forest(forest, forest_w)
    cover.update(old[fold[v]] for v in tree_cover)
    return _sol(g, w, frozenset(cover), "vc-fvs")


# ---------------------------------------------------------------------
# chordal-modulator parameterized cover


def vc_chordal(g: Graph, w: Optional[Weights] = None) -> VertexCoverSol:
    """Cover of weight at most (3/2) OPT_WVC + OPT_ChVD.

    Uniform local-ratio reductions on triangles (zero-weight vertices go
    into the cover and leave the graph) until the residual graph is
    triangle-free, where chordal subgraphs are forests, then vc_fvs.
    """
    if w is None:
        w = unit_weights(g.n)
    wp = list(w)
    alive = g.full_mask
    cover: set[int] = set()
    depth = 0
    while True:
        for v in [v for v in bits(alive) if wp[v] == 0]:
            cover.add(v)
            alive &= ~(1 << v)
        tri = find_induced(g, "triangle", within=alive)
        if tri is None:
            break
        lam = min(wp[v] for v in tri)
        for v in tri:
            wp[v] -= lam
        depth += 1
    sub, old = g.induced_subgraph(bits(alive))
    sub_w = tuple(wp[v] for v in old)
    inner = vc_fvs(sub, sub_w)
    cover.update(old[v] for v in inner.cover)
    return _sol(g, w, frozenset(cover), "vc-chordal", depth)


# ---------------------------------------------------------------------
# split-modulator parameterized cover (unweighted)


def two_maximal_clique(g: Graph, within: Optional[int] = None) -> frozenset[int]:
    """A clique not improvable by swapping out fewer vertices than are
    swapped in, with at most two incoming.  Seeded greedily from the
    highest-degree vertex; each improvement grows the clique, so at most
    n rounds happen."""
    mask = g.full_mask if within is None else within
    if mask == 0:
        return frozenset()
    seed = max(bits(mask), key=lambda v: ((g.adj_bits[v] & mask).bit_count(), -v))
    clique = _greedy_clique(g, seed, mask)
    return _improve_to_2maximal(g, clique, mask)


def _greedy_clique(g: Graph, seed: int, mask: int) -> int:
    clique = 1 << seed
    common = g.adj_bits[seed] & mask
    while common:
        v = (common & -common).bit_length() - 1
        clique |= 1 << v
        common &= g.adj_bits[v] & ~(1 << v)
    return clique


def _improve_to_2maximal(g: Graph, clique: int, mask: int) -> frozenset[int]:
    while True:
        # grow by one common neighbor
        common = mask & ~clique
        for v in bits(clique):
            common &= g.adj_bits[v]
        if common:
            v = (common & -common).bit_length() - 1
            clique |= 1 << v
            continue
        # swap one out, two in
        done = True
        for u in bits(clique):
            base = clique & ~(1 << u)
            cand = mask & ~clique
            for v in bits(base):
                cand &= g.adj_bits[v]
            hit = None
            for x in bits(cand):
                ys = cand & g.adj_bits[x] & ~((1 << (x + 1)) - 1)
                if ys:
                    hit = (x, (ys & -ys).bit_length() - 1)
                    break
            if hit is not None:
                clique = base | (1 << hit[0]) | (1 << hit[1])
                done = False
                break
        if done:
            return frozenset(bits(clique))


def vc_budgeted_2approx(g: Graph, c: int) -> VertexCoverSol:
    """Unweighted cover of size at most max(OPT, 2*OPT - c): try every
    deletion set of size up to ``c`` before 2-approximating the rest."""
    w = unit_weights(g.n)
    best: Optional[frozenset[int]] = None
    for k in range(min(c, g.n) + 1):
        for combo in combinations(range(g.n), k):
            rest, old = g.induced_subgraph(set(range(g.n)) - set(combo))
            approx = vc_2approx(rest)
            cand = frozenset(combo) | {old[v] for v in approx}
            if best is None or len(cand) < len(best):
                best = cand
    return _sol(g, w, best, f"vc-budgeted[{c}]")


def vc_split(g: Graph) -> VertexCoverSol:
    """Unweighted cover of size at most OPT_VC + OPT_SVD.

    Recursion on G - Z for a 2-maximal clique Z: when the rest is nearly
    edgeless the near-clique solution is optimal; otherwise the better of
    the recursive call and the budgeted 2-approximation (c = 2), each
    joined with Z.  Ties go to the recursion branch.
    """
    w = unit_weights(g.n)

    def rec(alive: int, depth: int) -> frozenset[int]:
        sub_edges = [(u, v) for u in bits(alive) for v in bits(g.adj_bits[u] & alive) if v > u]
        if not sub_edges:
            return frozenset()
        z = two_maximal_clique(g, within=alive)
        zmask = mask_of(z)
        rest = alive & ~zmask
        small = _cover_of_size_le1(g, rest)
        if small is not None:
            for v in sorted(z):
                cand = (z - {v}) | small
                if _covers_within(g, cand, alive):
                    return frozenset(cand)
            return frozenset(z | small)
        sub, old = g.induced_subgraph(bits(rest))
        budgeted = {old[v] for v in vc_budgeted_2approx(sub, 2).cover}
        recursive = rec(rest, depth + 1)
        x1 = frozenset(budgeted) | z
        x2 = recursive | z
        return x2 if len(x2) <= len(x1) else x1

    cover = rec(g.full_mask, 0)
    return _sol(g, w, cover, "vc-split")


def _cover_of_size_le1(g: Graph, mask: int) -> Optional[frozenset[int]]:
    """A vertex cover of G[mask] of size at most 1, if one exists."""
    edges = [(u, v) for u in bits(mask) for v in bits(g.adj_bits[u] & mask) if v > u]
    if not edges:
        return frozenset()
    for v in bits(mask):
        if all(u == v or x == v for u, x in edges):
            return frozenset((v,))
    return None


def _covers_within(g: Graph, cand: set[int], alive: int) -> bool:
    uncovered = alive & ~mask_of(cand)
    return not any(g.adj_bits[u] & uncovered for u in bits(uncovered))


# ---------------------------------------------------------------------


def independent_set_from_cover(g: Graph, sol: VertexCoverSol) -> frozenset[int]:
    """Complement of a vertex cover: an independent set."""
    m = mask_of(sol.cover)
    if not all((m >> u & 1) or (m >> v & 1) for u, v in g.edges()):
        raise ValueError("not a vertex cover")
    return frozenset(v for v in range(g.n) if not (m >> v & 1))
