"""Core restriction and minimum-degree peeling over one or several layers."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class PeelingTrace:
    """Result of peeling a vertex set down to nothing.

    ``removals[i]`` is ``(vertex, degree)`` for the i-th deleted vertex, where
    ``degree`` is its (minimum over layers) induced degree at removal time.
    Because the deleted vertex always has the smallest such degree,
    ``removals[i][1]`` is also the objective of the set that remained just
    before step ``i``.
    """

    removals: tuple[tuple[int, int], ...]

    @property
    def objectives(self) -> list[int]:
        return [d for _, d in self.removals]

    def remaining(self, step: int) -> frozenset[int]:
        """Vertex set that is still present before removal number ``step``."""
        return frozenset(v for v, _ in self.removals[step:])


def kcore(g: Graph, s: Iterable[int], c: int) -> frozenset[int]:
    """Largest subset of ``s`` in which every vertex keeps at least ``c`` neighbours."""
    return kcore_multi((g,), s, c)


def kcore_multi(layers: Sequence[Graph], s: Iterable[int], c: int) -> frozenset[int]:
    """Largest subset of ``s`` with induced degree at least ``c`` in every layer."""
    if c < 0:
        raise ValueError("core order must be nonnegative")
    alive = set(s)
    if c == 0:
        return frozenset(alive)
    degs = [{v: sum(1 for u in h.adj[v] if u in alive) for v in alive} for h in layers]
    queue = deque(sorted(v for v in alive if any(d[v] < c for d in degs)))
    dead = set(queue)
    while queue:
        v = queue.popleft()
        alive.discard(v)
        for h, d in zip(layers, degs):
            for u in h.adj[v]:
                if u in alive:
                    d[u] -= 1
                    if d[u] < c and u not in dead:
                        dead.add(u)
                        queue.append(u)
    return frozenset(alive)


def layer_degrees(layers: Sequence[Graph], s: Iterable[int]) -> list[dict[int, int]]:
    members = s if isinstance(s, (set, frozenset)) else frozenset(s)
    return [{v: sum(1 for u in h.adj[v] if u in members) for v in members} for h in layers]


def min_degree_vertex_multi(layers: Sequence[Graph], s: Iterable[int]) -> tuple[int, int, int]:
    """Vertex whose smallest induced degree over all layers is minimal.

    Returns ``(vertex, layer, degree)``.  Ties go to the smallest layer index,
    then the smallest vertex id.
    """
    members = frozenset(s)
    if not members:
        raise ValueError("cannot pick a vertex from an empty set")
    best = None
    for t, degs in enumerate(layer_degrees(layers, members)):
        for v, d in degs.items():
            key = (d, t, v)
            if best is None or key < best:
                best = key
    d, t, v = best
    return v, t, d


def min_degree_multi(layers: Sequence[Graph], s: Iterable[int]) -> int:
    """``min_t`` of the minimum induced degree of ``s`` in layer ``t``."""
    return min_degree_vertex_multi(layers, s)[2]


def peel(layers: Sequence[Graph], s: Iterable[int] | None = None) -> PeelingTrace:
    """Repeatedly delete the vertex chosen by :func:`min_degree_vertex_multi`."""
    if not layers:
        raise ValueError("at least one layer is required")
    members = set(range(layers[0].n)) if s is None else set(s)
    degs = layer_degrees(layers, members)

    heap = []
    for t, d in enumerate(degs):
        for v, dv in d.items():
            heap.append((dv, t, v))
    heapq.heapify(heap)

    removals = []
    while members:
        d, t, v = heapq.heappop(heap)
        # stale entries: vertex gone or degree has since dropped
        if v not in members or degs[t][v] != d:
            continue
        removals.append((v, d))
        members.discard(v)
        for tt, h in enumerate(layers):
            dd = degs[tt]
            for u in h.adj[v]:
                if u in members:
                    dd[u] -= 1
                    heapq.heappush(heap, (dd[u], tt, u))
    return PeelingTrace(tuple(removals))


def bff_mm_peel(layers: Sequence[Graph]) -> tuple[frozenset[int], int]:
    """Exact maximiser of ``min_t min-degree(H_t[S])`` by greedy peeling.

    Among optimal prefixes of the peeling the largest one is returned.
    """
    if not layers or layers[0].n < 1:
        raise ValueError("need at least one layer with at least one vertex")
    trace = peel(layers)
    objectives = trace.objectives
    best = max(objectives)
    step = objectives.index(best)
    return trace.remaining(step), best
