"""Competitor methods that ignore (or only loosely use) edge connectivity.

* BFF-MM: maximise ``min(min-degree G[S], min-degree H[S])`` by peeling.
* BFF-AA: maximise ``d_G(S) + d_H(S)`` exactly, as the densest subgraph of
  the union multigraph (an edge present in both layers counts twice).
* k-CCO: a maximal set that is a connected k-core in ``G`` and connected in
  ``H``.  Only the constraints are documented for this method, so the
  fixed-point procedure below is our own.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .connectivity import FlowNetwork, edge_connectivity
from .graph import Graph, connected_components, induced_subgraph
from .peeling import bff_mm_peel, kcore


@dataclass(frozen=True)
class BaselineResult:
    method: str
    nodes: frozenset[int]
    objective: int | Fraction
    achieved_connectivity: int


def _lambda(g: Graph, nodes) -> int:
    return edge_connectivity(induced_subgraph(g, nodes)[0]) if len(nodes) > 1 else 0


def bff_mm(g: Graph, h: Graph) -> BaselineResult:
    nodes, objective = bff_mm_peel((g, h))
    return BaselineResult("bff-mm", nodes, objective, _lambda(g, nodes))


def _union_weights(g: Graph, h: Graph) -> dict[tuple[int, int], int]:
    weights: dict[tuple[int, int], int] = {}
    for layer in (g, h):
        for e in layer.edges():
            weights[e] = weights.get(e, 0) + 1
    return weights


def _denser_subset(n: int, weights, total: int, density: Fraction) -> frozenset[int] | None:
    """A vertex set whose weighted edge density exceeds ``density``, or None.

    Goldberg's network with all capacities multiplied by the denominator:
    the cut around ``{s} + S`` costs ``n*m*b + 2*(a*|S| - b*w(S))``, so a cut
    cheaper than ``n*m*b`` exists exactly when some S has ``w(S)/|S| > a/b``.
    """
    a, b = density.numerator, density.denominator
    s, t = n, n + 1
    net = FlowNetwork(n + 2)
    wdeg = [0] * n
    for (u, v), w in weights.items():
        net.add_edge(u, v, w * b, w * b)
        wdeg[u] += w
        wdeg[v] += w
    for v in range(n):
        net.add_edge(s, v, total * b)
        net.add_edge(v, t, total * b + 2 * a - wdeg[v] * b)
    cut = net.max_flow(s, t)
    if cut >= n * total * b:
        return None
    return frozenset(net.source_side(s) - {s})


def _density(weights, nodes) -> Fraction:
    w = sum(c for (u, v), c in weights.items() if u in nodes and v in nodes)
    return Fraction(w, len(nodes))


def bff_aa(g: Graph, h: Graph) -> BaselineResult:
    """Exact maximiser of ``d_G(S) + d_H(S)``.

    Starts from the whole vertex set and repeatedly asks the flow network for
    a strictly denser set until none exists (Dinkelbach-style iteration), so
    every density involved is an exact rational.
    """
    if g.n != h.n:
        raise ValueError("layers must share the vertex set")
    weights = _union_weights(g, h)
    total = sum(weights.values())
    if total == 0:
        raise ValueError("both layers are edgeless; every set has objective 0")
    best = frozenset(range(g.n))
    density = _density(weights, best)
    while (denser := _denser_subset(g.n, weights, total, density)) is not None:
        best = denser
        density = _density(weights, best)
    return BaselineResult("bff-aa", best, 2 * density, _lambda(g, best))


def kcco(g: Graph, h: Graph, k: int) -> BaselineResult | None:
    """Largest maximal set inducing a connected k-core in ``g`` and a connected ``h``.

    Each piece is cut down to its k-core in ``g`` and split along the common
    refinement of its ``g`` and ``h`` components until nothing changes.
    Returns ``None`` when no nonempty set survives.  Ties on size go to the
    lexicographically smallest sorted vertex list.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    results = []
    stack = [frozenset(range(g.n))]
    while stack:
        piece = kcore(g, stack.pop(), k)
        if not piece:
            continue
        h_comp = {}
        for i, comp in enumerate(connected_components(h, piece)):
            for v in comp:
                h_comp[v] = i
        cells: dict[tuple[int, int], set[int]] = {}
        for i, comp in enumerate(connected_components(g, piece)):
            for v in comp:
                cells.setdefault((i, h_comp[v]), set()).add(v)
        if len(cells) == 1:
            results.append(piece)
        else:
            stack.extend(frozenset(c) for c in cells.values())
    if not results:
        return None
    best = min(results, key=lambda s: (-len(s), sorted(s)))
    return BaselineResult("kcco", best, len(best), _lambda(g, best))


def connectivity_profile(results: Sequence[BaselineResult], g: Graph) -> list[tuple[str, int]]:
    """Exact edge connectivity of ``g`` restricted to each method's output."""
    return [(r.method, _lambda(g, r.nodes)) for r in results]
