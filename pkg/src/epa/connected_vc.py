"""Connected vertex cover with a split-graph additive guarantee.

The driver (:func:`cvc_split`) recurses on clique contractions G<Z> (the
clique collapses to one vertex that gains a pendant leaf, forcing it into
any connected cover).  Solutions of the contraction lift back by swapping
the contracted vertex for the whole clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .certify import is_clique
from .graphs import Graph, bits, mask_of
from .recognize import find_induced
from .solvers import cvc_savage
from .vertex_cover import _improve_to_2maximal


@dataclass(frozen=True)
class ConnectedVCSol:
    cover: frozenset[int]
    algorithm: str
    depth: int = 0

    @property
    def size(self) -> int:
        return len(self.cover)


# ---------------------------------------------------------------------
# connected subset enumeration


def connected_subsets(g: Graph, k: int, within: Optional[int] = None) -> Iterator[int]:
    """All vertex masks of connected induced subgraphs on exactly ``k``
    vertices, each exactly once, in a fixed order.

    ESU-style expansion: grow from every anchor vertex using only higher
    ids, extending with exclusive new neighbors so no set repeats.
    """
    mask = g.full_mask if within is None else within
    if k == 0:
        yield 0
        return

    def extend(sub: int, ext: int, closed: int, above: int, left: int) -> Iterator[int]:
        if left == 0:
            yield sub
            return
        e = ext
        while e:
            wbit = e & -e
            e ^= wbit
            w = wbit.bit_length() - 1
            new_ext = e | (g.adj_bits[w] & above & ~closed & ~sub)
            yield from extend(sub | wbit, new_ext, closed | g.adj_bits[w], above, left - 1)

    for v in bits(mask):
        above = mask & ~((1 << (v + 1)) - 1)
        yield from extend(1 << v, g.adj_bits[v] & above, g.adj_bits[v], above, k - 1)


def _covers_mask(g: Graph, cover: int, within: int) -> bool:
    uncovered = within & ~cover
    return not any(g.adj_bits[u] & uncovered for u in bits(uncovered))


def _brute_min_cvc(g: Graph, limit: int) -> Optional[frozenset[int]]:
    """Minimum connected vertex cover if its size is at most ``limit``."""
    full = g.full_mask
    if g.m == 0:
        return frozenset()
    for k in range(1, min(limit, g.n) + 1):
        for sub in connected_subsets(g, k):
            if _covers_mask(g, sub, full):
                return frozenset(bits(sub))
    return None


# ---------------------------------------------------------------------
# budgeted connected cover


def cvc_budgeted(g: Graph, c: int) -> ConnectedVCSol:
    """Connected cover of size at most max(OPT_CVC, OPT_CVC + OPT_VC - c).

    Small connected sets that already cover everything are returned as
    is; otherwise every connected set Y of size c+1 is contracted and
    Savage's cover of G<Y> is lifted by swapping the contracted vertex
    for Y.
    """
    if not g.is_connected():
        raise ValueError("budgeted connected cover needs a connected graph")
    best: Optional[frozenset[int]] = None

    def consider(cand: frozenset[int]) -> None:
        nonlocal best
        if best is None or len(cand) < len(best):
            best = cand

    if g.m == 0:
        return ConnectedVCSol(frozenset(), f"cvc-budgeted[{c}]")
    for k in range(1, min(c, g.n) + 1):
        for sub in connected_subsets(g, k):
            if _covers_mask(g, sub, g.full_mask):
                consider(frozenset(bits(sub)))
    for sub in connected_subsets(g, min(c + 1, g.n)):
        y = frozenset(bits(sub))
        con = g.contract_with_pendant(y)
        s = cvc_savage(con.graph)
        consider(con.lift(s) | y)
    return ConnectedVCSol(best, f"cvc-budgeted[{c}]")


# ---------------------------------------------------------------------
# exact solver for instances whose contraction has a tiny optimum


def cvc_small_after_contraction(g: Graph, z: frozenset[int], c: int) -> ConnectedVCSol:
    """Exact minimum connected vertex cover, given a clique ``z`` whose
    contraction has a connected cover of size at most ``c``.

    Tries, for each u in z, the optimum of G<z - u> lifted by z - u (the
    case where some minimum cover misses u), plus the optimum of G<z>
    lifted by z.  Raises when the premise fails.
    """
    if not g.is_connected():
        raise ValueError("needs a connected graph")
    if not z or not is_clique(g, z):
        raise ValueError("z must be a nonempty clique")
    if g.n == 1:
        return ConnectedVCSol(frozenset(), "cvc-exact-small")
    if len(z) == 1:
        direct = _brute_min_cvc(g, c)
        if direct is None:
            raise ValueError("contraction optimum exceeds the stated budget")
        return ConnectedVCSol(direct, "cvc-exact-small")
    best: Optional[frozenset[int]] = None
    for u in sorted(z):
        con = g.contract_with_pendant(z - {u})
        inner = _brute_min_cvc(con.graph, c + 1)
        if inner is None:
            raise ValueError("contraction optimum exceeds the stated budget")
        cand = (z - {u}) | con.lift(inner)
        if best is None or len(cand) < len(best):
            best = cand
    con = g.contract_with_pendant(z)
    inner = _brute_min_cvc(con.graph, c)
    if inner is None:
        raise ValueError("contraction optimum exceeds the stated budget")
    cand = z | con.lift(inner)
    if best is None or len(cand) < len(best):
        best = cand
    return ConnectedVCSol(best, "cvc-exact-small")


# ---------------------------------------------------------------------
# the split-modulator driver


def _contraction_clique(g: Graph) -> frozenset[int]:
    """A 2-maximal clique that guarantees recursion progress.

    When a triangle exists the clique is grown from one (size >= 3, so
    contraction shrinks the graph).  In triangle-free graphs every edge
    is 2-maximal; an edge with both endpoints of degree >= 2 strictly
    decreases the number of such vertices, and when none exists the graph
    is a star whose contraction the caller solves exactly.
    """
    tri = find_induced(g, "triangle")
    if tri is not None:
        clique = mask_of(tri)
        common = g.full_mask & ~clique
        for v in tri:
            common &= g.adj_bits[v]
        while common:
            v = (common & -common).bit_length() - 1
            clique |= 1 << v
            common &= g.adj_bits[v] & ~(1 << v)
        return _improve_to_2maximal(g, clique, g.full_mask)
    for u, v in g.edges():
        if g.degree(u) >= 2 and g.degree(v) >= 2:
            return frozenset((u, v))
    return frozenset(next(g.edges()))


def cvc_split(g: Graph) -> ConnectedVCSol:
    """Connected vertex cover of size at most OPT_CVC + OPT_SVD."""
    if not g.is_connected():
        raise ValueError("split-parameterized connected cover needs a connected graph")

    def rec(h: Graph, depth: int) -> frozenset[int]:
        if h.n <= 1:
            return frozenset()
        z = _contraction_clique(h)
        con = h.contract_with_pendant(z)
        if _brute_min_cvc(con.graph, 3) is not None:
            return cvc_small_after_contraction(h, z, 3).cover
        x1 = rec(con.graph, depth + 1)
        x2 = cvc_budgeted(con.graph, 4).cover
        cand1 = con.lift(x1) | z
        cand2 = con.lift(x2) | z
        return cand1 if len(cand1) <= len(cand2) else cand2

    cover = rec(g, 0)
    return ConnectedVCSol(cover, "cvc-split")
