"""Exponential-time exact solvers used as ground truth.

These are deliberately independent of the polynomial algorithms they
certify: plain subset enumeration, backtracking and branch-and-bound on
bitmask graphs.  Every solver refuses inputs above its budget instead of
stalling, and enumeration order is fixed so that certificates are
reproducible (subsets are scanned ascending by size and then in
lexicographic vertex order, or by ascending subset rank where noted).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .certify import induces_pattern
from .graphs import Graph, Weights, bits, mask_of, unit_weights


class BudgetExceeded(RuntimeError):
    """Input too large for an exact oracle."""


@dataclass(frozen=True)
class OracleBudget:
    vc: int = 12
    cvc: int = 12
    tp: int = 12
    coloring: int = 11
    modulator: int = 10
    lp: int = 10
    max_steps: int = 50_000_000


DEFAULT_BUDGET = OracleBudget()


def _require(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise BudgetExceeded(f"{what} oracle limited to n <= {limit}, got n = {n}")


def _scaled_int_weights(w: Sequence[Fraction]) -> tuple[list[int], int]:
    scale = lcm(*(f.denominator for f in w)) if w else 1
    return [int(f * scale) for f in w], scale


# ---------------------------------------------------------------------
# vertex cover


def exact_min_wvc(
    g: Graph, w: Optional[Weights] = None, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[Fraction, frozenset[int]]:
    """Minimum-weight vertex cover by scanning all subsets ascending by rank."""
    _require(g.n, budget.vc, "vertex cover")
    if w is None:
        w = unit_weights(g.n)
    wi, scale = _scaled_int_weights(w)
    n = g.n
    edge_bits = [(1 << u) | (1 << v) for u, v in g.edges()]
    wtab = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        wtab[mask] = wtab[mask ^ low] + wi[low.bit_length() - 1]
    best_w = None
    best_mask = 0
    for mask in range(1 << n):
        if best_w is not None and wtab[mask] >= best_w:
            continue
        if all(mask & eb for eb in edge_bits):
            best_w = wtab[mask]
            best_mask = mask
    return Fraction(best_w, scale), frozenset(bits(best_mask))


def exact_min_vc(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Minimum cardinality vertex cover (size-ascending enumeration)."""
    _require(g.n, budget.vc, "vertex cover")
    edge_bits = [(1 << u) | (1 << v) for u, v in g.edges()]
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            mask = mask_of(combo)
            if all(mask & eb for eb in edge_bits):
                return k, frozenset(combo)
    raise AssertionError("unreachable: V itself is a cover")


def exact_min_cvc(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Minimum connected vertex cover of a connected graph."""
    _require(g.n, budget.cvc, "connected vertex cover")
    if not g.is_connected():
        raise ValueError("connected vertex cover oracle needs a connected graph")
    edge_bits = [(1 << u) | (1 << v) for u, v in g.edges()]
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            mask = mask_of(combo)
            if all(mask & eb for eb in edge_bits) and g.induces_connected(combo):
                return k, frozenset(combo)
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------
# coloring


def exact_chromatic(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, tuple[int, ...]]:
    """Chromatic number with a witnessing coloring, by iterative deepening."""
    _require(g.n, budget.coloring, "chromatic number")
    n = g.n
    if n == 0:
        return 0, ()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    steps = 0

    def attempt(k: int) -> Optional[list[int]]:
        nonlocal steps
        colors = [0] * n
        used_mask = [0] * k  # vertices per color, as masks

        def bt(i: int, used: int) -> bool:
            nonlocal steps
            if i == n:
                return True
            steps += 1
            if steps > budget.max_steps:
                raise BudgetExceeded("chromatic oracle exceeded its step budget")
            v = order[i]
            limit = min(k, used + 1)
            for c in range(limit):
                if used_mask[c] & g.adj_bits[v]:
                    continue
                used_mask[c] |= 1 << v
                colors[v] = c + 1
                if bt(i + 1, max(used, c + 1)):
                    return True
                used_mask[c] &= ~(1 << v)
            return False

        return colors if bt(0, 0) else None

    for k in range(1, n + 1):
        got = attempt(k)
        if got is not None:
            return k, tuple(got)
    raise AssertionError("unreachable: n colors always suffice")


# ---------------------------------------------------------------------
# triangle packing


def exact_max_tp(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, tuple[frozenset[int], ...]]:
    """Maximum triangle packing by branch and bound over vertex choices."""
    _require(g.n, budget.tp, "triangle packing")
    triangles: list[tuple[int, int, int]] = []
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            for t in bits(g.adj_bits[u] & g.adj_bits[v] & ~((1 << (v + 1)) - 1)):
                triangles.append((u, v, t))
    tri_by_vertex: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    tri_masks = [mask_of(t) for t in triangles]
    for i, t in enumerate(triangles):
        for v in t:
            tri_by_vertex[v].append((i, tri_masks[i]))

    best: list[int] = []
    cur: list[int] = []

    def rec(free: int) -> None:
        if len(cur) + free.bit_count() // 3 <= len(best):
            return
        v = -1
        for u in bits(free):
            if any(tm & ~free == 0 for _, tm in tri_by_vertex[u]):
                v = u
                break
        if v == -1:
            if len(cur) > len(best):
                best[:] = cur
            return
        for i, tm in tri_by_vertex[v]:
            if tm & ~free == 0:
                cur.append(i)
                rec(free & ~tm)
                cur.pop()
        rec(free & ~(1 << v))

    rec(g.full_mask)
    return len(best), tuple(frozenset(triangles[i]) for i in best)


# ---------------------------------------------------------------------
# modulators


def _induced_cycle_masks(g: Graph, min_len: int, odd_only: bool = False) -> list[int]:
    out = []
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k < min_len or (odd_only and k % 2 == 0):
            continue
        if all((g.adj_bits[v] & mask).bit_count() == 2 for v in bits(mask)):
            if g.induces_connected(bits(mask)):
                out.append(mask)
    return out


def _pattern_masks(g: Graph, size: int, pattern: str) -> list[int]:
    return [
        mask_of(c)
        for c in combinations(range(g.n), size)
        if induces_pattern(g, c, pattern)
    ]


def obstruction_masks(g: Graph, cls: str) -> list[int]:
    """Vertex sets of all minimal induced obstructions for ``cls``.

    Deleting a set S lands in the class iff S hits every one of these
    (the classes are hereditary with these exact forbidden patterns).
    """
    if cls == "edgeless":
        return [(1 << u) | (1 << v) for u, v in g.edges()]
    if cls == "cluster":
        return _pattern_masks(g, 3, "P3")
    if cls == "cocluster":
        return _pattern_masks(g, 3, "co-P3")
    if cls == "cograph":
        return _pattern_masks(g, 4, "P4")
    if cls == "p3k1-free":
        return _pattern_masks(g, 4, "P3+K1")
    if cls == "triangle-free":
        return _pattern_masks(g, 3, "triangle")
    if cls == "co-triangle-free":
        return _pattern_masks(g, 3, "K3bar")
    if cls == "split":
        return (
            _pattern_masks(g, 4, "2K2")
            + _pattern_masks(g, 4, "C4")
            + _pattern_masks(g, 5, "C5")
        )
    if cls == "forest":
        return _induced_cycle_masks(g, 3)
    if cls == "bipartite":
        return _induced_cycle_masks(g, 3, odd_only=True)
    if cls == "chordal":
        return _induced_cycle_masks(g, 4)
    if cls == "cochordal":
        return _induced_cycle_masks(g.complement(), 4)
    raise ValueError(f"no modulator oracle for class {cls!r}")


def exact_min_modulator(
    g: Graph,
    cls: str,
    w: Optional[Weights] = None,
    budget: OracleBudget = DEFAULT_BUDGET,
):
    """Minimum (weight) vertex set whose deletion lands in ``cls``.

    Unweighted: enumerated ascending by size, then lexicographically.
    Weighted: full subset scan ascending by rank, keeping the first
    strict improvement.  Returns (size-or-weight, set).
    """
    _require(g.n, budget.modulator, "modulator")
    obs = obstruction_masks(g, cls)
    if not obs:
        return (Fraction(0) if w is not None else 0), frozenset()
    if w is None:
        for k in range(g.n + 1):
            for combo in combinations(range(g.n), k):
                mask = mask_of(combo)
                if all(mask & ob for ob in obs):
                    return k, frozenset(combo)
        raise AssertionError("unreachable: V hits everything")
    wi, scale = _scaled_int_weights(w)
    n = g.n
    wtab = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        wtab[mask] = wtab[mask ^ low] + wi[low.bit_length() - 1]
    best_w = None
    best_mask = 0
    for mask in range(1 << n):
        if best_w is not None and wtab[mask] >= best_w:
            continue
        if all(mask & ob for ob in obs):
            best_w = wtab[mask]
            best_mask = mask
    return Fraction(best_w, scale), frozenset(bits(best_mask))


# ---------------------------------------------------------------------
# LP relaxation


_HALF_VECTORS: dict[int, np.ndarray] = {}


def _half_vectors(n: int) -> np.ndarray:
    """All vectors over {0, 1, 2} (value in half-units), shape (3^n, n)."""
    got = _HALF_VECTORS.get(n)
    if got is None:
        idx = np.arange(3**n)
        cols = [(idx // (3**j)) % 3 for j in range(n)]
        got = np.stack(cols, axis=1).astype(np.int8)
        _HALF_VECTORS[n] = got
    return got


def exact_lp_vc(
    g: Graph, w: Optional[Weights] = None, budget: OracleBudget = DEFAULT_BUDGET
) -> Fraction:
    """Optimum of the vertex cover LP over all {0, 1/2, 1} vectors.

    Half-integral vectors suffice to attain the LP optimum, so this
    enumeration equals the true LP value.
    """
    _require(g.n, budget.lp, "LP")
    if w is None:
        w = unit_weights(g.n)
    if g.n == 0:
        return Fraction(0)
    wi, scale = _scaled_int_weights(w)
    vecs = _half_vectors(g.n)
    feasible = np.ones(len(vecs), dtype=bool)
    for u, v in g.edges():
        feasible &= vecs[:, u] + vecs[:, v] >= 2
    obj = vecs.astype(np.int64) @ np.asarray(wi, dtype=np.int64)
    best = int(obj[feasible].min())
    return Fraction(best, 2 * scale)


# ---------------------------------------------------------------------
# matching


def exact_max_matching_size(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum matching cardinality by memoized branching."""
    _require(g.n, budget.vc, "matching")
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        v = -1
        for u in bits(mask):
            if g.adj_bits[u] & mask:
                v = u
                break
        if v == -1:
            memo[mask] = 0
            return 0
        best = rec(mask & ~(1 << v))
        for u in bits(g.adj_bits[v] & mask):
            best = max(best, 1 + rec(mask & ~(1 << v) & ~(1 << u)))
        memo[mask] = best
        return best

    return rec(g.full_mask)
