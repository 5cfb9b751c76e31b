"""Simple undirected graphs over dense integer vertex ids.

Vertex sets are plain ``frozenset``s of ids.  Every graph is immutable once
built; restricting to a subset produces a new graph together with the
mapping back to the parent's ids.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Duplicate edges are merged.  Self-loops and out-of-range endpoints raise
    ``ValueError``.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def _from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        # trusted constructor: adj must already be symmetric, sorted and loop-free
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(tuple(a) for a in adj)
        g.m = sum(len(a) for a in g.adj) // 2
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency tuples are sorted
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DualInstance:
    """A connectivity graph ``g`` and one or more density layers over the same vertices.

    ``labels[i]`` is the external name of vertex ``i``.  ``common_nodes`` is the
    size of the label intersection reported when the instance was aligned from
    files (``None`` for generated instances).
    """

    g: Graph
    layers: tuple[Graph, ...]
    labels: tuple[str, ...] = field(default=())
    common_nodes: int | None = None

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ValueError("at least one density layer is required")
        for h in layers:
            if h.n != self.g.n:
                raise ValueError("all graphs must share the same vertex count")
        object.__setattr__(self, "layers", layers)
        labels = tuple(self.labels) or tuple(str(i) for i in range(self.g.n))
        if len(labels) != self.g.n or len(set(labels)) != len(labels):
            raise ValueError("labels must be a bijection onto the vertex ids")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def pair(cls, g: Graph, h: Graph, labels: Sequence[str] = ()) -> "DualInstance":
        return cls(g, (h,), tuple(labels))

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def h(self) -> Graph:
        return self.layers[0]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[s]`` relabelled to ``0 .. |s|-1`` and the list mapping new ids to old ones.

    New ids follow ascending order of the old ids.
    """
    old_ids = sorted(set(s))
    new_id = {v: i for i, v in enumerate(old_ids)}
    adj = []
    for v in old_ids:
        adj.append([new_id[u] for u in g.adj[v] if u in new_id])
    return Graph._from_adjacency(adj), old_ids


def degree_sequence(g: Graph, s: Iterable[int]) -> dict[int, int]:
    """Induced degree of every vertex of ``s`` within ``g[s]``."""
    members = s if isinstance(s, (set, frozenset)) else frozenset(s)
    return {v: sum(1 for u in g.adj[v] if u in members) for v in sorted(members)}


def min_degree(g: Graph, s: Iterable[int]) -> tuple[int, int]:
    """Minimum induced degree over ``s`` and the smallest vertex attaining it."""
    degs = degree_sequence(g, s)
    if not degs:
        raise ValueError("min_degree of an empty vertex set is undefined")
    best_v = min(degs, key=lambda v: (degs[v], v))
    return degs[best_v], best_v


def connected_components(g: Graph, s: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``g[s]`` ordered by their smallest vertex."""
    members = g.vertices() if s is None else frozenset(s)
    seen: set[int] = set()
    comps = []
    for root in sorted(members):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in members and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph, s: Iterable[int] | None = None) -> bool:
    members = g.vertices() if s is None else frozenset(s)
    if not members:
        return False
    return len(connected_components(g, members)) == 1


# small named graphs, used by the CLI presets and throughout the tests

def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1 .. leaves``."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)


def with_edges(g: Graph, extra: Iterable[tuple[int, int]] = (), n: int | None = None) -> Graph:
    """Copy of ``g`` with additional edges and optionally more (isolated) vertices."""
    return Graph(g.n if n is None else n, list(g.edges()) + list(extra))


def without_edges(g: Graph, removed: Iterable[tuple[int, int]]) -> Graph:
    gone = {frozenset(e) for e in removed}
    return Graph(g.n, (e for e in g.edges() if frozenset(e) not in gone))
