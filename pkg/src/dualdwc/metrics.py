"""Summary statistics of an induced subgraph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, connected_components, induced_subgraph

STATS_COLUMNS = ("nodes", "min_deg", "max_deg", "avg_deg", "diameter", "triangles", "avg_shortest_path")


@dataclass(frozen=True)
class SubgraphStats:
    """Degree, distance and triangle statistics of ``g[s]``.

    When ``g[s]`` is disconnected, ``diameter`` and ``avg_shortest_path``
    describe its largest component (ties: the one holding the smallest vertex)
    and ``connected`` is False.  ``avg_shortest_path`` averages over unordered
    pairs of distinct vertices of that component; it is 0 for a single vertex.
    """

    nodes: int
    min_deg: int
    max_deg: int
    avg_deg: Fraction
    diameter: int
    triangles: int
    avg_shortest_path: Fraction
    connected: bool

    def row(self) -> list[str]:
        return [
            str(self.nodes),
            str(self.min_deg),
            str(self.max_deg),
            f"{float(self.avg_deg):.1f}",
            str(self.diameter),
            str(self.triangles),
            f"{float(self.avg_shortest_path):.1f}",
        ]

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "min_deg": self.min_deg,
            "max_deg": self.max_deg,
            "avg_deg": float(self.avg_deg),
            "diameter": self.diameter,
            "triangles": self.triangles,
            "avg_shortest_path": float(self.avg_shortest_path),
            "connected": self.connected,
        }


def _triangles(sub: Graph) -> int:
    # orient every edge towards the endpoint of higher (degree, id)
    rank = sorted(range(sub.n), key=lambda v: (sub.degree(v), v))
    pos = [0] * sub.n
    for i, v in enumerate(rank):
        pos[v] = i
    out = [set(u for u in sub.adj[v] if pos[u] > pos[v]) for v in range(sub.n)]
    count = 0
    for v in range(sub.n):
        fwd = out[v]
        for u in fwd:
            count += len(fwd & out[u])
    return count


def triangle_count(g: Graph, s: Iterable[int] | None = None) -> int:
    """Number of 3-cliques in ``g[s]`` (all of ``g`` when ``s`` is None)."""
    sub = g if s is None else induced_subgraph(g, s)[0]
    return _triangles(sub)


def _bfs(sub: Graph, source: int) -> list[int]:
    dist = [-1] * sub.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sub.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def stats(g: Graph, s: Iterable[int]) -> SubgraphStats:
    sub, _ = induced_subgraph(g, s)
    if sub.n == 0:
        raise ValueError("statistics of an empty vertex set are undefined")
    degrees = [sub.degree(v) for v in range(sub.n)]

    comps = connected_components(sub)
    largest = max(comps, key=len)  # max keeps the first on ties, comps are ordered by min id
    diameter = 0
    total = 0
    for v in sorted(largest):
        dist = _bfs(sub, v)
        for u in largest:
            d = dist[u]
            total += d
            if d > diameter:
                diameter = d
    c = len(largest)
    pairs = c * (c - 1) // 2
    # each unordered pair was counted from both ends
    avg_path = Fraction(total, 2 * pairs) if pairs else Fraction(0)

    return SubgraphStats(
        nodes=sub.n,
        min_deg=min(degrees),
        max_deg=max(degrees),
        avg_deg=Fraction(2 * sub.m, sub.n),
        diameter=diameter,
        triangles=_triangles(sub),
        avg_shortest_path=avg_path,
        connected=len(comps) == 1,
    )
