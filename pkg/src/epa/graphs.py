"""Immutable simple undirected graphs with dense integer vertex ids.

Vertices are always 0..n-1.  Adjacency is kept twice: as sorted tuples
(for iteration) and as integer bitmasks (for the set arithmetic that the
solvers and oracles lean on).  All graph values are immutable; derived
graphs (complement, induced subgraph, contraction) are new objects
together with an index map back to the parent.

Vertex weights are plain tuples of nonnegative ``Fraction`` values so
that weight subtractions and comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "m", "adj", "adj_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_bits = tuple(mask_of(s) for s in nbrs)

    # -- basic queries ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs -----------------------------------------------

    def complement(self) -> "Graph":
        n = self.n
        es = [(u, v) for u in range(n) for v in range(u + 1, n) if not self.has_edge(u, v)]
        return Graph(n, es)

    def induced_subgraph(self, s: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by ``s``; returns (graph, old-ids-by-new-id)."""
        old = tuple(sorted(set(s)))
        index = {o: i for i, o in enumerate(old)}
        es = [
            (index[u], index[v])
            for u in old
            for v in self.adj[u]
            if v > u and v in index
        ]
        return Graph(len(old), es), old

    def contract_with_pendant(self, y: Iterable[int]) -> "Contraction":
        """Contract ``y`` to one vertex and append a fresh pendant leaf.

        The surviving vertices keep their relative order and occupy ids
        0..n-|y|-1; the contracted vertex and the leaf take the next two
        ids.  No parallel edges arise: the contracted vertex is adjacent
        to the outside neighborhood of ``y``.
        """
        yset = set(y)
        if not yset:
            raise ValueError("cannot contract an empty vertex set")
        if not yset <= set(range(self.n)):
            raise ValueError("contracted set out of range")
        kept = [u for u in range(self.n) if u not in yset]
        index = {o: i for i, o in enumerate(kept)}
        nv = len(kept)
        vert = nv          # contracted vertex
        leaf = nv + 1
        es = [(index[u], index[v]) for u in kept for v in self.adj[u] if v > u and v not in yset]
        outside = set()
        for u in yset:
            outside.update(v for v in self.adj[u] if v not in yset)
        es.extend((index[u], vert) for u in sorted(outside))
        es.append((vert, leaf))
        old_to_new = tuple(index[u] if u not in yset else vert for u in range(self.n))
        return Contraction(Graph(nv + 2, es), vert, leaf, old_to_new, tuple(kept))

    # -- structural primitives ----------------------------------------

    def degeneracy_order(self) -> tuple[tuple[int, ...], int]:
        """Min-degree removal order and the degeneracy value.

        Repeatedly removes a minimum-degree vertex (lowest id on ties);
        the returned value is the largest residual degree seen, which
        equals max over subgraphs of the minimum degree.
        """
        alive = self.full_mask
        deg = [self.degree(v) for v in range(self.n)]
        order: list[int] = []
        degen = 0
        for _ in range(self.n):
            v = min((u for u in range(self.n) if alive >> u & 1), key=lambda u: (deg[u], u))
            degen = max(degen, deg[v])
            order.append(v)
            alive ^= 1 << v
            for u in bits(self.adj_bits[v] & alive):
                deg[u] -= 1
        return tuple(order), degen

    def connected_components(self) -> list[frozenset[int]]:
        seen = 0
        comps: list[frozenset[int]] = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = self.component_mask(s, self.full_mask)
            seen |= comp
            comps.append(frozenset(bits(comp)))
        return comps

    def component_mask(self, start: int, within: int) -> int:
        """Mask of the connected component of ``start`` inside ``within``."""
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj_bits[v] & within & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0, self.full_mask) == self.full_mask

    def induces_connected(self, s: Iterable[int]) -> bool:
        """True when G[s] is connected (the empty set counts as connected)."""
        m = mask_of(s)
        if m == 0:
            return True
        start = (m & -m).bit_length() - 1
        return self.component_mask(start, m) == m


@dataclass(frozen=True)
class Contraction:
    """Result of :meth:`Graph.contract_with_pendant`."""

    graph: Graph
    vertex: int                    # the contracted vertex
    leaf: int                      # the appended degree-1 leaf
    old_to_new: tuple[int, ...]    # old id -> new id (members of Y map to `vertex`)
    kept: tuple[int, ...]          # new id -> old id for surviving vertices

    def lift(self, new_ids: Iterable[int]) -> frozenset[int]:
        """Map new ids back to old ones, dropping the contracted vertex and leaf."""
        out = []
        for v in new_ids:
            if v != self.vertex and v != self.leaf:
                out.append(self.kept[v])
        return frozenset(out)


# -- weights ----------------------------------------------------------

Weights = tuple[Fraction, ...]


def as_weights(values: Sequence, n: int) -> Weights:
    """Normalize to exact nonnegative rationals of length ``n``."""
    w = tuple(Fraction(x) for x in values)
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    return w


def unit_weights(n: int) -> Weights:
    return (Fraction(1),) * n


def total(w: Sequence[Fraction], vertices: Iterable[int]) -> Fraction:
    return sum((w[v] for v in vertices), Fraction(0))


# -- tiny constructors (shared by tests, generator and docs) ----------

def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    es = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, es)


def full_join(a: Graph, b: Graph) -> Graph:
    es = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    es += [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return Graph(a.n + b.n, es)
