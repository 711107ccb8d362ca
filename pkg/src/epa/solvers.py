"""Exact polynomial solvers on tractable classes and approximation
subroutines consumed by the additive-guarantee algorithms.

Contracts (all oracle-tested at small sizes):

* ``wvc_forest`` / ``wvc_cograph`` / ``wvc_cluster`` are exact on their
  classes and raise :class:`~epa.recognize.NotInClassError` otherwise.
* ``lp_half_integral_vc`` returns an optimal half-integral solution of
  the vertex cover LP (computed by a minimum s-t cut on the bipartite
  double cover, so it is exact with rational weights).
* ``max_matching`` is a maximum matching in a general graph (blossom
  contraction).
* ``fvs_2approx`` returns an inclusion-minimal feedback vertex set of
  weight at most twice the optimum.
* ``cvc_savage`` returns a connected vertex cover of size at most
  OPT_CVC + OPT_VC (internal vertices of a DFS tree).
* ``vc_2approx`` returns a vertex cover of weight at most twice the
  optimum (local ratio on edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .graphs import Graph, Weights, bits, mask_of, total, unit_weights
from .recognize import Cotree, NotInClassError, build_cotree, find_induced, _find_cycle

Matching = frozenset[tuple[int, int]]


# ---------------------------------------------------------------------
# exact solvers on tractable classes


def wvc_forest(g: Graph, w: Weights) -> frozenset[int]:
    """Minimum-weight vertex cover of a forest (tree DP)."""
    cyc = _find_cycle(g, odd_only=False)
    if cyc is not None:
        raise NotInClassError("forest", frozenset(cyc))
    n = g.n
    dp_in = [Fraction(0)] * n   # v in the cover
    dp_out = [Fraction(0)] * n  # v not in the cover
    parent = [-1] * n
    cover: set[int] = set()
    visited = [False] * n
    for root in range(n):
        if visited[root]:
            continue
        # iterative post-order
        order = []
        stack = [root]
        visited[root] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for u in g.adj[v]:
                if not visited[u]:
                    visited[u] = True
                    parent[u] = v
                    stack.append(u)
        for v in reversed(order):
            dp_in[v] = w[v]
            dp_out[v] = Fraction(0)
            for u in g.adj[v]:
                if parent[u] == v:
                    dp_in[v] += min(dp_in[u], dp_out[u])
                    dp_out[v] += dp_in[u]
        # reconstruct top-down
        take = [False] * n
        take[root] = dp_in[root] < dp_out[root]
        for v in order:
            if v != root:
                p = parent[v]
                take[v] = True if not take[p] else dp_in[v] < dp_out[v]
            if take[v]:
                cover.add(v)
    return frozenset(cover)


def wvc_cluster(g: Graph, w: Weights) -> frozenset[int]:
    """Minimum-weight vertex cover of a cluster graph: drop one heaviest
    vertex per clique."""
    p3 = find_induced(g, "P3")
    if p3 is not None:
        raise NotInClassError("cluster", p3)
    cover: set[int] = set()
    for comp in g.connected_components():
        keep_out = max(sorted(comp), key=lambda v: (w[v], -v))
        cover.update(comp - {keep_out})
    return frozenset(cover)


def wvc_cograph(g: Graph, w: Weights) -> frozenset[int]:
    """Minimum-weight vertex cover of a cograph by cotree DP."""
    tree = build_cotree(g)
    if isinstance(tree, frozenset):
        raise NotInClassError("cograph", tree)

    def solve(node: Cotree) -> tuple[Fraction, list[int], list[int]]:
        # returns (cost, cover, all leaves under node)
        if node.kind == "leaf":
            return Fraction(0), [], [node.vertex]
        subs = [solve(c) for c in node.children]
        leaves = [v for _, _, lv in subs for v in lv]
        if node.kind == "union":
            cost = sum((c for c, _, _ in subs), Fraction(0))
            cover = [v for _, cv, _ in subs for v in cv]
            return cost, cover, leaves
        total_w = total(w, leaves)
        best = None
        for i, (cost_i, cover_i, leaves_i) in enumerate(subs):
            cand = total_w - total(w, leaves_i) + cost_i
            if best is None or cand < best[0]:
                best = (cand, i)
        cost, i = best
        keep = set(subs[i][2])
        cover = [v for v in leaves if v not in keep] + subs[i][1]
        return cost, cover, leaves

    if g.n == 0:
        return frozenset()
    _, cover, _ = solve(tree)
    return frozenset(cover)


# ---------------------------------------------------------------------
# half-integral LP via the bipartite double cover


@dataclass(frozen=True)
class HalfIntegralLP:
    """Optimal half-integral solution of the vertex cover LP."""

    values: tuple[Fraction, ...]
    objective: Fraction
    v0: frozenset[int]
    v_half: frozenset[int]
    v1: frozenset[int]


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                for e in self.head[u]:
                    if self.cap[e] > 0 and level[self.to[e]] == -1:
                        level[self.to[e]] = level[u] + 1
                        queue.append(self.to[e])
            if level[t] == -1:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                got = dfs(s, 1 << 62)
                if not got:
                    break
                flow += got

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def lp_half_integral_vc(g: Graph, w: Optional[Weights] = None) -> HalfIntegralLP:
    """Optimal half-integral LP solution by min cut on the double cover.

    Left copies hang off the source with capacity w(u), right copies feed
    the sink with capacity w(v); each edge {u,v} contributes two infinite
    arcs.  A minimum cut is a minimum-weight vertex cover of the double
    cover, and halving its indicator gives the LP optimum.
    """
    if w is None:
        w = unit_weights(g.n)
    n = g.n
    scale = lcm(*(f.denominator for f in w)) if n else 1
    wi = [int(f * scale) for f in w]
    s, t = 2 * n, 2 * n + 1
    net = _Dinic(2 * n + 2)
    inf = sum(wi) + 1
    for u in range(n):
        net.add(s, u, wi[u])
        net.add(n + u, t, wi[u])
    for u, v in g.edges():
        net.add(u, n + v, inf)
        net.add(v, n + u, inf)
    flow = net.maxflow(s, t)
    reach = net.reachable(s)
    halves = [0] * n  # x in half-units
    for u in range(n):
        if u not in reach:          # source arc cut: left copy in cover
            halves[u] += 1
        if (n + u) in reach:        # sink arc cut: right copy in cover
            halves[u] += 1
    values = tuple(Fraction(h, 2) for h in halves)
    objective = Fraction(flow, 2 * scale)
    return HalfIntegralLP(
        values=values,
        objective=objective,
        v0=frozenset(u for u in range(n) if halves[u] == 0),
        v_half=frozenset(u for u in range(n) if halves[u] == 1),
        v1=frozenset(u for u in range(n) if halves[u] == 2),
    )


# ---------------------------------------------------------------------
# maximum matching (blossom contraction)


def max_matching(g: Graph) -> Matching:
    """Maximum cardinality matching in a general graph.

    Alternating-tree search with blossom contraction; O(n^3) and honest
    about odd components, which bipartite augmenting paths are not.
    """
    n = g.n
    match = [-1] * n
    for u in range(n):                      # greedy warm start
        if match[u] == -1:
            for v in g.adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    def find_path(root: int) -> bool:
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        head = 0

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            x = a
            while True:
                x = base[x]
                seen[x] = True
                if match[x] == -1:
                    break
                x = p[match[x]]
            y = b
            while True:
                y = base[y]
                if seen[y]:
                    return y
                y = p[match[y]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = True
                blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while head < len(queue):
            v = queue[head]
            head += 1
            for to in g.adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        cur = to
                        while cur != -1:
                            pv = p[cur]
                            ppv = match[pv]
                            match[cur] = pv
                            match[pv] = cur
                            cur = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return frozenset((u, match[u]) for u in range(n) if match[u] > u)


# ---------------------------------------------------------------------
# feedback vertex set 2-approximation (Becker-Geiger)


def _degree2_cycle(g: Graph, alive: int) -> Optional[list[int]]:
    """A semidisjoint cycle in G[alive]: all vertices but at most one have
    degree exactly 2.  Found by following chains of degree-2 vertices."""

    def deg(v: int) -> int:
        return (g.adj_bits[v] & alive).bit_count()

    for u in bits(alive):
        if deg(u) != 2:
            continue
        sides = []
        closed = None
        for start in bits(g.adj_bits[u] & alive):
            prev, cur = u, start
            side = []
            while deg(cur) == 2 and cur != u:
                side.append(cur)
                nxts = g.adj_bits[cur] & alive & ~(1 << prev)
                prev, cur = cur, (nxts & -nxts).bit_length() - 1
            if cur == u:                     # pure cycle component
                closed = [u] + side
                break
            side.append(cur)                 # attachment vertex (degree != 2)
            sides.append(side)
        if closed is not None:
            return closed
        left, right = sides
        if left[-1] == right[-1]:            # both chain ends meet the same hub
            hub = left[-1]
            return [hub] + list(reversed(left[:-1])) + [u] + right[:-1]
    return None


def fvs_2approx(g: Graph, w: Weights) -> frozenset[int]:
    """Inclusion-minimal feedback vertex set of weight <= 2 * OPT.

    Local-ratio scheme: clean degree <= 1 vertices, reduce uniformly on a
    semidisjoint cycle when one exists and proportionally to degree
    otherwise, harvest zero-weight vertices, then reverse-delete.
    """
    n = g.n
    wp = list(w)
    alive = g.full_mask
    picked: list[int] = []

    def deg(v: int) -> int:
        return (g.adj_bits[v] & alive).bit_count()

    while True:
        # clean vertices that cannot be on a cycle
        changed = True
        while changed:
            changed = False
            for v in bits(alive):
                if deg(v) <= 1:
                    alive &= ~(1 << v)
                    changed = True
        if not alive:
            break
        zeros = [v for v in bits(alive) if wp[v] == 0]
        if zeros:
            for v in zeros:
                picked.append(v)
                alive &= ~(1 << v)
            continue
        cyc = _degree2_cycle(g, alive)
        if cyc is not None:
            gamma = min(wp[v] for v in cyc)
            for v in set(cyc):
                wp[v] -= gamma
        else:
            gamma = min(Fraction(wp[v], deg(v)) for v in bits(alive))
            for v in bits(alive):
                wp[v] -= gamma * deg(v)

    # reverse delete for inclusion-minimality
    kept = set(picked)
    for v in reversed(picked):
        trial = kept - {v}
        if _is_forest_without(g, trial):
            kept = trial
    return frozenset(kept)


def _is_forest_without(g: Graph, removed: set[int]) -> bool:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# ---------------------------------------------------------------------
# Savage's connected vertex cover


def cvc_savage(g: Graph) -> frozenset[int]:
    """Internal vertices of a DFS tree: a connected vertex cover of size
    at most OPT_CVC + OPT_VC.  The root is pruned when the rest still
    covers and connects (keeps single-edge graphs feasible)."""
    if not g.is_connected():
        raise ValueError("Savage's algorithm needs a connected graph")
    if g.n <= 1:
        return frozenset()
    children = [0] * g.n
    visited = [False] * g.n
    stack = [(0, -1)]
    while stack:
        v, parent = stack.pop()
        if visited[v]:
            continue
        visited[v] = True
        if parent != -1:
            children[parent] += 1
        for u in reversed(g.adj[v]):
            if not visited[u]:
                stack.append((u, v))
    internal = {v for v in range(g.n) if children[v] > 0}
    pruned = internal - {0}
    if pruned and _covers(g, pruned) and g.induces_connected(pruned):
        return frozenset(pruned)
    return frozenset(internal)


def _covers(g: Graph, s: set[int]) -> bool:
    m = mask_of(s)
    return all((m >> u & 1) or (m >> v & 1) for u, v in g.edges())


# ---------------------------------------------------------------------
# weighted vertex cover 2-approximation (local ratio on edges)


def vc_2approx(g: Graph, w: Optional[Weights] = None) -> frozenset[int]:
    """Vertex cover of weight at most twice the optimum."""
    if w is None:
        w = unit_weights(g.n)
    wp = list(w)
    cover: set[int] = set()
    for u, v in g.edges():
        if u in cover or v in cover:
            continue
        gamma = min(wp[u], wp[v])
        wp[u] -= gamma
        wp[v] -= gamma
        if wp[u] == 0:
            cover.add(u)
        if wp[v] == 0:
            cover.add(v)
    return frozenset(cover)
