"""Graph-class membership tests with witnesses.

Each recognizer returns a :class:`Recognition`: a verdict plus either a
structural witness (bipartition, perfect elimination ordering, split
partition, cotree, clique partition) or a forbidden induced pattern
(P3, co-P3, P4, hole, odd cycle, triangle, empty triple, P3+K1, and the
split obstructions 2K2/C4/C5).  Witnesses are meant to be re-validated
by :mod:`epa.certify`; nothing downstream trusts the producer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, bits

CLASSES = (
    "edgeless",
    "forest",
    "bipartite",
    "cluster",
    "cocluster",
    "cograph",
    "split",
    "chordal",
    "cochordal",
    "triangle-free",
    "co-triangle-free",
    "p3k1-free",
)

FIND_PATTERNS = ("P3", "co-P3", "P4", "triangle", "K3bar", "P3+K1")


class NotInClassError(ValueError):
    """Raised when an exact solver is handed a graph outside its class."""

    def __init__(self, cls: str, witness: frozenset[int]):
        super().__init__(f"graph is not in class {cls!r}; witness {sorted(witness)}")
        self.cls = cls
        self.witness = witness


@dataclass(frozen=True)
class Recognition:
    cls: str
    member: bool
    witness: Optional[frozenset[int]] = None
    witness_kind: Optional[str] = None
    structure: object = None


@dataclass(frozen=True)
class Cotree:
    """Rooted union/join tree whose leaves are the graph's vertices."""

    kind: str                      # 'leaf' | 'union' | 'join'
    vertex: Optional[int] = None
    children: tuple["Cotree", ...] = field(default=())

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out: list[int] = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def evaluate(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Vertices and edges of the graph the cotree denotes."""
        if self.kind == "leaf":
            return [self.vertex], []
        vs: list[int] = []
        es: list[tuple[int, int]] = []
        parts: list[list[int]] = []
        for c in self.children:
            cv, ce = c.evaluate()
            vs.extend(cv)
            es.extend(ce)
            parts.append(cv)
        if self.kind == "join":
            for i, a in enumerate(parts):
                for b in parts[i + 1 :]:
                    es.extend((u, v) if u < v else (v, u) for u in a for v in b)
        return vs, es


# ---------------------------------------------------------------------
# induced-pattern search


def find_induced(g: Graph, pattern: str, within: Optional[int] = None) -> Optional[frozenset[int]]:
    """First induced occurrence of ``pattern`` (deterministic scan order).

    ``within`` optionally restricts the search to a vertex mask.  Returns
    ``None`` exactly when the (restricted) graph is pattern-free.
    """
    mask = g.full_mask if within is None else within
    if pattern == "P3":
        return _find_p3(g, mask)
    if pattern == "co-P3":
        return _find_co_p3(g, mask)
    if pattern == "P4":
        return _find_p4(g, mask)
    if pattern == "triangle":
        return _find_triangle(g, mask)
    if pattern == "K3bar":
        return _find_k3bar(g, mask)
    if pattern == "P3+K1":
        return _find_p3k1(g, mask)
    raise ValueError(f"unsupported pattern {pattern!r}")


def _find_p3(g: Graph, mask: int) -> Optional[frozenset[int]]:
    # center vertex with two nonadjacent neighbors
    for b in bits(mask):
        nb = g.adj_bits[b] & mask
        for a in bits(nb):
            cands = nb & ~g.adj_bits[a] & ~(1 << a)
            if cands:
                c = (cands & -cands).bit_length() - 1
                return frozenset((a, b, c))
    return None


def _find_co_p3(g: Graph, mask: int) -> Optional[frozenset[int]]:
    # an edge plus a vertex seeing neither endpoint
    for u in bits(mask):
        for v in bits(g.adj_bits[u] & mask):
            if v < u:
                continue
            rest = mask & ~(g.adj_bits[u] | g.adj_bits[v]) & ~(1 << u) & ~(1 << v)
            if rest:
                w = (rest & -rest).bit_length() - 1
                return frozenset((u, v, w))
    return None


def _find_p4(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for b in bits(mask):
        for c in bits(g.adj_bits[b] & mask):
            side_a = g.adj_bits[b] & ~g.adj_bits[c] & ~(1 << c) & mask
            side_d = g.adj_bits[c] & ~g.adj_bits[b] & ~(1 << b) & mask
            if not side_a or not side_d:
                continue
            for a in bits(side_a):
                ds = side_d & ~g.adj_bits[a] & ~(1 << a)
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return frozenset((a, b, c, d))
    return None


def _find_triangle(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for u in bits(mask):
        above = mask & ~((1 << (u + 1)) - 1)
        for v in bits(g.adj_bits[u] & above):
            common = g.adj_bits[u] & g.adj_bits[v] & above & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return frozenset((u, v, w))
    return None


def _find_k3bar(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for u in bits(mask):
        above_u = mask & ~((1 << (u + 1)) - 1) & ~g.adj_bits[u]
        for v in bits(above_u):
            rest = above_u & ~((1 << (v + 1)) - 1) & ~g.adj_bits[v]
            if rest:
                w = (rest & -rest).bit_length() - 1
                return frozenset((u, v, w))
    return None


def _find_p3k1(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for b in bits(mask):
        nb = g.adj_bits[b] & mask
        for a in bits(nb):
            for c in bits(nb & ~g.adj_bits[a] & ~(1 << a)):
                closed = g.adj_bits[a] | g.adj_bits[b] | g.adj_bits[c]
                closed |= (1 << a) | (1 << b) | (1 << c)
                rest = mask & ~closed
                if rest:
                    d = (rest & -rest).bit_length() - 1
                    return frozenset((a, b, c, d))
    return None


# ---------------------------------------------------------------------
# cycle machinery (forest / bipartite / chordal witnesses)


def _shrink_to_chordless(g: Graph, cycle: list[int], keep_odd: bool) -> list[int]:
    """Shrink a simple cycle along chords; optionally preserve odd length."""
    while True:
        k = len(cycle)
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return cycle
        i, j = chord
        arc1 = cycle[i : j + 1]                       # i..j plus chord
        arc2 = cycle[j:] + cycle[: i + 1]             # j..i plus chord
        if keep_odd:
            cycle = arc1 if len(arc1) % 2 == 1 else arc2
        else:
            cycle = arc1 if len(arc1) <= len(arc2) else arc2


def _find_cycle(g: Graph, odd_only: bool) -> Optional[list[int]]:
    """Some chordless cycle (odd if requested), or None."""
    n = g.n
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.adj[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and dist[v] <= dist[u]:
                    if odd_only and (dist[u] + dist[v] + 1) % 2 == 0:
                        continue
                    chain_u = _chain(parent, u)
                    chain_v = _chain(parent, v)
                    pos = {x: i for i, x in enumerate(chain_u)}
                    j = next(i for i, x in enumerate(chain_v) if x in pos)
                    meet = chain_v[j]
                    cyc = chain_u[: pos[meet] + 1] + list(reversed(chain_v[:j]))
                    if odd_only and len(cyc) % 2 == 0:
                        continue
                    return _shrink_to_chordless(g, cyc, keep_odd=odd_only)
    return None


def _chain(parent: list[int], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out


def _find_hole(g: Graph) -> Optional[frozenset[int]]:
    """An induced cycle of length >= 4, or None (graph is chordal)."""
    n = g.n
    for v in range(n):
        nb = g.adj[v]
        for i, x in enumerate(nb):
            for y in nb[i + 1 :]:
                if g.has_edge(x, y):
                    continue
                allowed = (g.full_mask & ~g.adj_bits[v] & ~(1 << v)) | (1 << x) | (1 << y)
                path = _shortest_path(g, x, y, allowed)
                if path is not None:
                    return frozenset([v] + path)
    return None


def _shortest_path(g: Graph, s: int, t: int, allowed: int) -> Optional[list[int]]:
    if not (allowed >> s & 1 and allowed >> t & 1):
        return None
    parent = {s: -1}
    queue = [s]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if u == t:
            out = [t]
            while parent[out[-1]] != -1:
                out.append(parent[out[-1]])
            return list(reversed(out))
        for v in bits(g.adj_bits[u] & allowed):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return None


# ---------------------------------------------------------------------
# split obstructions


def _find_2k2(g: Graph, mask: int) -> Optional[frozenset[int]]:
    edges = [(u, v) for u, v in g.edges() if mask >> u & 1 and mask >> v & 1]
    for i, (a, b) in enumerate(edges):
        blocked = g.adj_bits[a] | g.adj_bits[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1 :]:
            if not (blocked >> c & 1) and not (blocked >> d & 1):
                return frozenset((a, b, c, d))
    return None


def _find_c4(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for u in bits(mask):
        for v in bits(mask & ~((1 << (u + 1)) - 1)):
            if g.has_edge(u, v):
                continue
            common = g.adj_bits[u] & g.adj_bits[v] & mask
            for a in bits(common):
                rest = common & ~g.adj_bits[a] & ~((1 << (a + 1)) - 1)
                if rest:
                    b = (rest & -rest).bit_length() - 1
                    return frozenset((u, v, a, b))
    return None


def _find_c5(g: Graph, mask: int) -> Optional[frozenset[int]]:
    for a in bits(mask):
        for b in bits(g.adj_bits[a] & mask):
            for c in bits(g.adj_bits[b] & mask & ~g.adj_bits[a] & ~(1 << a)):
                seen_ab = g.adj_bits[a] | g.adj_bits[b] | (1 << a) | (1 << b)
                for d in bits(g.adj_bits[c] & mask & ~seen_ab):
                    es = g.adj_bits[d] & g.adj_bits[a] & mask
                    es &= ~g.adj_bits[b] & ~g.adj_bits[c] & ~(1 << b) & ~(1 << c)
                    if es:
                        e = (es & -es).bit_length() - 1
                        return frozenset((a, b, c, d, e))
    return None


# ---------------------------------------------------------------------
# cotree construction


def _co_components(g: Graph, mask: int) -> list[int]:
    """Connected components of the complement, restricted to ``mask``."""
    comps = []
    left = mask
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= ~g.adj_bits[v] & mask & ~comp & ~(1 << v)
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        left &= ~comp
    return comps


def _components(g: Graph, mask: int) -> list[int]:
    comps = []
    left = mask
    while left:
        start = (left & -left).bit_length() - 1
        comp = g.component_mask(start, mask)
        comps.append(comp)
        left &= ~comp
    return comps


def build_cotree(g: Graph):
    """Cotree of ``g`` or, on failure, the frozenset of an induced P4.

    Recursive complement-connectivity decomposition: at each level either
    the graph or its complement splits; if neither does (on two or more
    vertices) an induced P4 exists and is returned as the failure value.
    """

    def rec(mask: int):
        if mask & (mask - 1) == 0:
            return Cotree("leaf", vertex=mask.bit_length() - 1)
        comps = _components(g, mask)
        if len(comps) > 1:
            kids = []
            for c in comps:
                sub = rec(c)
                if isinstance(sub, frozenset):
                    return sub
                kids.append(sub)
            return Cotree("union", children=tuple(kids))
        cocomps = _co_components(g, mask)
        if len(cocomps) > 1:
            kids = []
            for c in cocomps:
                sub = rec(c)
                if isinstance(sub, frozenset):
                    return sub
                kids.append(sub)
            return Cotree("join", children=tuple(kids))
        return _find_p4(g, mask)

    if g.n == 0:
        return Cotree("union", children=())
    return rec(g.full_mask)


# ---------------------------------------------------------------------
# chordality via maximum cardinality search


def mcs_order(g: Graph) -> tuple[int, ...]:
    """Maximum-cardinality-search ordering; reversed it is a candidate PEO."""
    n = g.n
    weight = [0] * n
    picked = [False] * n
    order = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not picked[u]),
            key=lambda u: (weight[u], -u),
        )
        picked[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not picked[u]:
                weight[u] += 1
    return tuple(reversed(order))


def is_perfect_elimination(g: Graph, peo: tuple[int, ...]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda u: pos[u])
        for u in later:
            if u != p and not g.has_edge(u, p):
                return False
    return True


# ---------------------------------------------------------------------
# recognizers


def recognize(g: Graph, cls: str) -> Recognition:
    """Class membership plus a validating witness.

    Verdicts agree with exhaustive forbidden-subgraph search (this is
    property-tested at small sizes).
    """
    if cls == "edgeless":
        for u, v in g.edges():
            return Recognition(cls, False, frozenset((u, v)), "K2")
        return Recognition(cls, True)

    if cls == "forest":
        cyc = _find_cycle(g, odd_only=False)
        if cyc is not None:
            return Recognition(cls, False, frozenset(cyc), "cycle")
        return Recognition(cls, True)

    if cls == "bipartite":
        sides = _try_bipartition(g)
        if sides is not None:
            return Recognition(cls, True, structure=sides)
        cyc = _find_cycle(g, odd_only=True)
        return Recognition(cls, False, frozenset(cyc), "odd-cycle")

    if cls == "cluster":
        p3 = _find_p3(g, g.full_mask)
        if p3 is not None:
            return Recognition(cls, False, p3, "P3")
        parts = tuple(g.connected_components())
        return Recognition(cls, True, structure=parts)

    if cls == "cocluster":
        co = g.complement()
        p3 = _find_p3(co, co.full_mask)
        if p3 is not None:
            return Recognition(cls, False, p3, "co-P3")
        parts = tuple(co.connected_components())
        return Recognition(cls, True, structure=parts)

    if cls == "cograph":
        tree = build_cotree(g)
        if isinstance(tree, frozenset):
            return Recognition(cls, False, tree, "P4")
        return Recognition(cls, True, structure=tree)

    if cls == "split":
        part = _try_split_partition(g)
        if part is not None:
            return Recognition(cls, True, structure=part)
        for finder, kind in ((_find_2k2, "2K2"), (_find_c4, "C4"), (_find_c5, "C5")):
            w = finder(g, g.full_mask)
            if w is not None:
                return Recognition(cls, False, w, kind)
        raise AssertionError("non-split graph without a 2K2/C4/C5 witness")

    if cls == "chordal":
        peo = mcs_order(g)
        if is_perfect_elimination(g, peo):
            return Recognition(cls, True, structure=peo)
        hole = _find_hole(g)
        return Recognition(cls, False, hole, "hole")

    if cls == "cochordal":
        co = g.complement()
        inner = recognize(co, "chordal")
        if inner.member:
            return Recognition(cls, True, structure=inner.structure)
        return Recognition(cls, False, inner.witness, "co-hole")

    if cls == "triangle-free":
        t = _find_triangle(g, g.full_mask)
        if t is not None:
            return Recognition(cls, False, t, "triangle")
        return Recognition(cls, True)

    if cls == "co-triangle-free":
        t = _find_k3bar(g, g.full_mask)
        if t is not None:
            return Recognition(cls, False, t, "K3bar")
        return Recognition(cls, True)

    if cls == "p3k1-free":
        w = _find_p3k1(g, g.full_mask)
        if w is not None:
            return Recognition(cls, False, w, "P3+K1")
        return Recognition(cls, True)

    raise ValueError(f"unsupported class {cls!r}")


def _try_bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return left, right


def _try_split_partition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Hammer-Simeone degree test; returns (clique, independent set)."""
    n = g.n
    if n == 0:
        return frozenset(), frozenset()
    by_deg = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in by_deg]
    m_idx = max((i + 1 for i in range(n) if degs[i] >= i), default=0)
    lhs = sum(degs[:m_idx])
    rhs = m_idx * (m_idx - 1) + sum(degs[m_idx:])
    if lhs != rhs:
        return None
    return frozenset(by_deg[:m_idx]), frozenset(by_deg[m_idx:])
