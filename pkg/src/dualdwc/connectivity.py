"""Edge connectivity: global minimum cut, k-connectivity tests, max-flow and
maximal k-edge-connected component decomposition.

Two independent routes are provided for deciding "is this piece
k-edge-connected, and if not, where does it break":

``"mincut"``
    Deterministic Stoer-Wagner on unit weights.  Exact global minimum cut,
    O(n m log n); used as the reference path.

``"certificate"``
    Repeated maximum-adjacency orderings with contraction.  In an MA ordering
    an edge ``(u, v)`` whose head ``v`` has attachment ``r(v) >= k`` right after
    the edge is scanned satisfies ``lambda(u, v) >= k`` (Nagamochi-Ibaraki), so
    such pairs can be merged without destroying any cut below ``k``.  Each
    round either contracts at least one pair or exposes a super-vertex of
    weighted degree below ``k``, which is a cut of value below ``k``.  This is
    the default because it is far faster on large sparse graphs.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .graph import Graph, connected_components
from .peeling import kcore

METHODS = ("certificate", "mincut")


@dataclass(frozen=True)
class CutResult:
    value: int
    side: frozenset[int]


@dataclass(frozen=True)
class Decomposition:
    """Maximal k-edge-connected components (size >= 2) and the vertices in none of them."""

    components: tuple[frozenset[int], ...]
    leftovers: frozenset[int]
    k: int


def _check_method(method):
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def _local_adjacency(g: Graph, members) -> tuple[list[int], list[list[int]]]:
    order = sorted(members)
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in order]
    return order, adj


# --- Stoer-Wagner -----------------------------------------------------------

def _stoer_wagner(adj: list[list[int]]) -> tuple[int, list[int]]:
    """Minimum cut of a connected unit-weight graph given by local adjacency."""
    n = len(adj)
    w = [dict.fromkeys(a, 1) for a in adj]
    groups = {i: [i] for i in range(n)}
    active = set(range(n))
    best_value = math.inf
    best_side: list[int] = []

    while len(active) > 1:
        start = min(active)
        key = dict.fromkeys(active, 0)
        in_a = {start}
        heap = []
        for u, wt in w[start].items():
            key[u] += wt
            heapq.heappush(heap, (-key[u], u))
        prev = last = start
        while len(in_a) < len(active):
            if not heap:
                raise ValueError("graph is disconnected")
            neg, u = heapq.heappop(heap)
            if u in in_a or -neg != key[u]:
                continue
            in_a.add(u)
            prev, last = last, u
            for x, wt in w[u].items():
                if x not in in_a:
                    key[x] += wt
                    heapq.heappush(heap, (-key[x], x))
        cut_of_phase = key[last]
        if cut_of_phase < best_value:
            best_value = cut_of_phase
            best_side = list(groups[last])
        # merge last into prev
        for x, wt in w[last].items():
            if x == prev:
                continue
            w[prev][x] = w[prev].get(x, 0) + wt
            w[x][prev] = w[x].get(prev, 0) + wt
            del w[x][last]
        w[prev].pop(last, None)
        w[last] = {}
        groups[prev].extend(groups.pop(last))
        active.discard(last)
    return int(best_value), best_side


def global_min_cut(g: Graph) -> CutResult:
    """Exact global minimum cut by Stoer-Wagner.

    Raises ``ValueError`` on graphs with fewer than two vertices or that are
    disconnected.
    """
    if g.n < 2:
        raise ValueError("global minimum cut needs at least two vertices")
    if len(connected_components(g)) != 1:
        raise ValueError("global minimum cut of a disconnected graph is trivially 0")
    value, side = _stoer_wagner([list(a) for a in g.adj])
    return CutResult(value, frozenset(side))


# --- contraction certificate ------------------------------------------------

def _cut_below_certificate(adj: list[list[int]], k: int) -> list[int] | None:
    """A vertex set whose boundary has fewer than ``k`` edges, or ``None`` if
    the connected graph ``adj`` is k-edge-connected."""
    w = [dict.fromkeys(a, 1) for a in adj]
    members = [[i] for i in range(len(adj))]
    while True:
        size = len(w)
        if size == 1:
            return None
        for i in range(size):
            if sum(w[i].values()) < k:
                return members[i]

        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        attach = [0] * size
        scanned = [False] * size
        heap = [(0, 0)]
        while heap:
            neg, u = heapq.heappop(heap)
            if scanned[u] or -neg != attach[u]:
                continue
            scanned[u] = True
            for v, wt in w[u].items():
                if scanned[v]:
                    continue
                attach[v] += wt
                if attach[v] >= k:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[max(ru, rv)] = min(ru, rv)
                heapq.heappush(heap, (-attach[v], v))

        roots = {}
        for i in range(size):
            r = find(i)
            if r not in roots:
                roots[r] = len(roots)
        # every vertex has degree >= k, so the final vertex of the ordering
        # always triggers at least one merge
        assert len(roots) < size
        new_w = [dict() for _ in roots]
        new_members = [[] for _ in roots]
        for i in range(size):
            ni = roots[find(i)]
            new_members[ni].extend(members[i])
            row = new_w[ni]
            for j, wt in w[i].items():
                nj = roots[find(j)]
                if nj != ni:
                    row[nj] = row.get(nj, 0) + wt
        w, members = new_w, new_members


def _cut_below(g: Graph, comp: frozenset[int], k: int, method: str) -> frozenset[int] | None:
    """Side of a cut of ``g[comp]`` with value below ``k``; ``None`` if there is none.

    ``comp`` must induce a connected subgraph with at least two vertices.
    """
    order, adj = _local_adjacency(g, comp)
    if method == "mincut":
        value, side = _stoer_wagner(adj)
        if value >= k:
            return None
    else:
        side = _cut_below_certificate(adj, k)
        if side is None:
            return None
    return frozenset(order[i] for i in side)


def edge_connectivity_at_least(g: Graph, k: int, method: str = "certificate") -> bool:
    """Whether ``g`` stays connected after deleting any ``k - 1`` edges.

    A single vertex counts as k-edge-connected for every ``k``; the empty
    graph does not.
    """
    _check_method(method)
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        return True
    if g.n == 0:
        return False
    if min(g.degree(v) for v in range(g.n)) < k:
        return False
    if len(connected_components(g)) != 1:
        return False
    return _cut_below(g, g.vertices(), k, method) is None


def edge_connectivity(g: Graph, method: str = "certificate") -> int:
    """Exact edge connectivity; 0 for disconnected graphs and for fewer than two vertices."""
    _check_method(method)
    if g.n < 2 or len(connected_components(g)) != 1:
        return 0
    if method == "mincut":
        return global_min_cut(g).value
    order, adj = _local_adjacency(g, g.vertices())
    lo, hi = 1, min(len(a) for a in adj)
    # invariant: lambda >= lo, lambda <= hi
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _cut_below_certificate(adj, mid) is None:
            lo = mid
        else:
            hi = mid - 1
    return lo


def induced_edge_connectivity(g: Graph, s: Iterable[int], method: str = "certificate") -> int:
    from .graph import induced_subgraph

    return edge_connectivity(induced_subgraph(g, s)[0], method)


# --- decomposition ----------------------------------------------------------

def decompose_within(g: Graph, members: Iterable[int], k: int,
                     method: str = "certificate") -> Decomposition:
    """Maximal k-edge-connected components of ``g[members]``, in ``g``'s ids."""
    _check_method(method)
    if k < 1:
        raise ValueError("k must be at least 1")
    components = []
    leftovers: set[int] = set()
    stack = [frozenset(members)]
    while stack:
        piece = stack.pop()
        if method == "certificate":
            # a vertex of degree < k lies in no k-edge-connected set of size >= 2
            core = kcore(g, piece, k)
            leftovers.update(piece - core)
            piece = core
        for comp in connected_components(g, piece):
            if len(comp) < 2:
                leftovers.update(comp)
                continue
            side = _cut_below(g, comp, k, method)
            if side is None:
                components.append(comp)
            else:
                stack.append(comp - side)
                stack.append(side)
    components.sort(key=min)
    return Decomposition(tuple(components), frozenset(leftovers), k)


def decompose_kecc(g: Graph, k: int, method: str = "certificate") -> Decomposition:
    """Maximal k-edge-connected components of ``g`` with at least two vertices.

    Components are ordered by their smallest vertex id; singletons are
    reported as leftovers, never as components.
    """
    return decompose_within(g, g.vertices(), k, method)


# --- max-flow ---------------------------------------------------------------

class FlowNetwork:
    """Directed network with integer capacities; Dinic's algorithm."""

    def __init__(self, n: int):
        self.n = n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.head: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        if cap < 0 or rev_cap < 0:
            raise ValueError("capacities must be nonnegative")
        a = len(self.head)
        self.head += [v, u]
        self.cap += [cap, rev_cap]
        self.out[u].append(a)
        self.out[v].append(a + 1)
        return a

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                v = self.head[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        if s == t:
            raise ValueError("source and sink must differ")
        head, cap, out = self.head, self.cap, self.out
        total = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.n
            while True:
                path: list[int] = []
                u = s
                while u != t:
                    arcs = out[u]
                    while it[u] < len(arcs):
                        a = arcs[it[u]]
                        if cap[a] > 0 and level[head[a]] == level[u] + 1:
                            break
                        it[u] += 1
                    if it[u] < len(arcs):
                        a = arcs[it[u]]
                        path.append(a)
                        u = head[a]
                        continue
                    if u == s:
                        break
                    # dead end: retreat one arc
                    level[u] = -1
                    a = path.pop()
                    u = head[a ^ 1]
                    it[u] += 1
                if u != t:
                    break
                f = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= f
                    cap[a ^ 1] += f
                total += f
        return total

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual network."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                v = self.head[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def max_flow(g: Graph, source: int, sink: int,
             capacities: Mapping[tuple[int, int], int | Fraction] | None = None):
    """Maximum ``source``-``sink`` flow in the undirected graph ``g``.

    ``capacities`` maps edges (either orientation) to nonnegative rationals;
    missing edges default to capacity 1.  The result is an ``int`` when all
    capacities are integral and a ``Fraction`` otherwise.
    """
    if source == sink:
        raise ValueError("source and sink must differ")
    caps = {}
    for u, v in g.edges():
        c = 1
        if capacities is not None:
            c = capacities.get((u, v), capacities.get((v, u), 1))
        caps[(u, v)] = Fraction(c)
    scale = 1
    for c in caps.values():
        scale = math.lcm(scale, c.denominator)
    net = FlowNetwork(g.n)
    for (u, v), c in caps.items():
        ic = int(c * scale)
        net.add_edge(u, v, ic, ic)
    value = net.max_flow(source, sink)
    return value if scale == 1 else Fraction(value, scale)
