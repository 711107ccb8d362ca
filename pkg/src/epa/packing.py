"""Triangle packing with additive guarantees.

A maximal packing loses at most one triangle per vertex of a cluster
modulator; a 3-maximal packing (no swap of at most two packed triangles
for strictly more) is optimal on coclusters, hence loses at most the
cocluster modulator size in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class TrianglePackingSol:
    triangles: tuple[frozenset[int], ...]
    algorithm: str

    @property
    def size(self) -> int:
        return len(self.triangles)


def _first_triangle(g: Graph, free: int) -> Optional[tuple[int, int, int]]:
    for u in bits(free):
        for v in bits(g.adj_bits[u] & free & ~((1 << (u + 1)) - 1)):
            ws = g.adj_bits[u] & g.adj_bits[v] & free & ~((1 << (v + 1)) - 1)
            if ws:
                return u, v, (ws & -ws).bit_length() - 1
    return None


def _triangles_within(g: Graph, pool: int) -> Iterator[tuple[int, int, int]]:
    for u in bits(pool):
        for v in bits(g.adj_bits[u] & pool & ~((1 << (u + 1)) - 1)):
            for w in bits(g.adj_bits[u] & g.adj_bits[v] & pool & ~((1 << (v + 1)) - 1)):
                yield u, v, w


def tp_maximal(g: Graph) -> TrianglePackingSol:
    """Greedy maximal packing: ascending vertex scan, lexicographically
    first completing pair; no triangle survives among free vertices."""
    free = g.full_mask
    packed: list[frozenset[int]] = []
    for u in range(g.n):
        if not free >> u & 1:
            continue
        nb = g.adj_bits[u] & free
        found = None
        for v in bits(nb):
            ws = nb & g.adj_bits[v] & ~((1 << (v + 1)) - 1)
            if ws:
                found = (v, (ws & -ws).bit_length() - 1)
                break
        if found is not None:
            tri = frozenset((u, found[0], found[1]))
            packed.append(tri)
            free &= ~mask_of(tri)
    return TrianglePackingSol(tuple(packed), "tp-maximal")


def _disjoint_sets(g: Graph, pool: int, want: int) -> Optional[list[tuple[int, int, int]]]:
    """``want`` pairwise disjoint triangles inside ``pool``, if they exist."""
    tris = list(_triangles_within(g, pool))

    def rec(start: int, used: int, acc: list[tuple[int, int, int]]) -> Optional[list]:
        if len(acc) == want:
            return acc
        for i in range(start, len(tris)):
            tm = mask_of(tris[i])
            if tm & used:
                continue
            got = rec(i + 1, used | tm, acc + [tris[i]])
            if got is not None:
                return got
        return None

    return rec(0, 0, [])


def tp_3maximal(g: Graph) -> TrianglePackingSol:
    """Improve a maximal packing by swaps that remove at most two packed
    triangles and insert strictly more, until none applies.

    Incoming triangles only ever use vertices freed by the removal plus
    currently free ones, which is enough: any improving swap's new
    triangles live there.
    """
    packed = [tuple(sorted(t)) for t in tp_maximal(g).triangles]
    while True:
        free = g.full_mask & ~mask_of(v for t in packed for v in t)
        add = _first_triangle(g, free)
        if add is not None:
            packed.append(add)
            continue
        improved = False
        for i in range(len(packed)):
            pool = free | mask_of(packed[i])
            got = _disjoint_sets(g, pool, 2)
            if got is not None:
                packed = packed[:i] + packed[i + 1 :] + got
                improved = True
                break
        if improved:
            continue
        for i in range(len(packed)):
            for j in range(i + 1, len(packed)):
                pool = free | mask_of(packed[i]) | mask_of(packed[j])
                got = _disjoint_sets(g, pool, 3)
                if got is not None:
                    packed = [t for k, t in enumerate(packed) if k not in (i, j)] + got
                    improved = True
                    break
            if improved:
                break
        if not improved:
            return TrianglePackingSol(tuple(frozenset(t) for t in packed), "tp-3maximal")
