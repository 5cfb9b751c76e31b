"""Exhaustive reference answers for small instances.

Nothing here touches the connectivity, peeling or solver modules: all
connectivity questions are settled by enumerating cuts over bitmasks, so the
oracle stays independent of the code it is used to check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import DualInstance, Graph
from .solver import NoSolution, Solution


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_subset_vertices: int = 15
    max_cut_vertices: int = 12


DEFAULT_BUDGET = OracleBudget()


def _masks(g: Graph) -> list[int]:
    out = []
    for nbrs in g.adj:
        m = 0
        for u in nbrs:
            m |= 1 << u
        out.append(m)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _min_deg(adj: list[int], s: int) -> int:
    return min((adj[v] & s).bit_count() for v in _bits(s))


def _connected(adj: list[int], s: int) -> bool:
    start = s & -s
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= s & ~seen
        seen |= nxt
        frontier = nxt
    return seen == s


def _crossing(adj: list[int], side: int, s: int) -> int:
    rest = s & ~side
    return sum((adj[v] & rest).bit_count() for v in _bits(side))


def _min_cut_mask(adj: list[int], s: int, stop_below: int | None = None) -> int:
    """Minimum over all bipartitions of ``s`` of the number of crossing edges.

    With ``stop_below`` set, returns as soon as a cut smaller than it is seen.
    """
    low = s & -s
    rest = s ^ low
    best = None
    sub = rest
    while True:
        side = low | sub
        if side != s:
            c = _crossing(adj, side, s)
            if best is None or c < best:
                best = c
                if stop_below is not None and best < stop_below:
                    return best
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return best


def _k_connected(adj: list[int], s: int, k: int) -> bool:
    """``G[s]`` k-edge-connected with at least two vertices."""
    if s.bit_count() < 2:
        return False
    if _min_deg(adj, s) < k or not _connected(adj, s):
        return False
    return _min_cut_mask(adj, s, stop_below=k) >= k


def _to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def brute_force_min_cut(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Global minimum cut value by enumerating all ``2^(n-1) - 1`` bipartitions."""
    if g.n > budget.max_cut_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds cut budget {budget.max_cut_vertices}")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    adj = _masks(g)
    full = (1 << g.n) - 1
    if not _connected(adj, full):
        raise ValueError("graph is disconnected")
    return _min_cut_mask(adj, full)


def brute_force_st_cut(g: Graph, source: int, sink: int,
                       budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum number of edges separating ``source`` from ``sink`` (unit capacities)."""
    if g.n > budget.max_cut_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds cut budget {budget.max_cut_vertices}")
    adj = _masks(g)
    full = (1 << g.n) - 1
    others = full & ~(1 << source) & ~(1 << sink)
    best = None
    sub = others
    while True:
        c = _crossing(adj, sub | (1 << source), full)
        best = c if best is None else min(best, c)
        if sub == 0:
            break
        sub = (sub - 1) & others
    return best


def brute_force_edge_connectivity(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """0 when disconnected or fewer than two vertices, otherwise the minimum cut."""
    if g.n > budget.max_cut_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds cut budget {budget.max_cut_vertices}")
    adj = _masks(g)
    full = (1 << g.n) - 1
    if g.n < 2 or not _connected(adj, full):
        return 0
    return _min_cut_mask(adj, full)


def brute_force_kecc(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """Inclusion-maximal vertex sets of size >= 2 inducing k-edge-connected subgraphs."""
    if g.n > budget.max_cut_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds cut budget {budget.max_cut_vertices}")
    adj = _masks(g)
    feasible = [s for s in range(1, 1 << g.n) if _k_connected(adj, s, k)]
    feasible.sort(key=lambda s: -s.bit_count())
    maximal: list[int] = []
    for s in feasible:
        if not any(s & t == s for t in maximal):
            maximal.append(s)
    return sorted((_to_set(s) for s in maximal), key=min)


def brute_force_dual_dwc(instance: DualInstance, k: int,
                         budget: OracleBudget = DEFAULT_BUDGET) -> Solution | NoSolution:
    """Best feasible set by trying every nonempty subset.

    Feasible means: at least two vertices and k-edge-connected in ``g``.  The
    one-vertex universe is the single exception and returns itself.  Among
    optimal sets the largest (then the numerically smallest bitmask) is
    returned.
    """
    n = instance.n
    if n > budget.max_subset_vertices:
        raise BudgetExceeded(f"n={n} exceeds subset budget {budget.max_subset_vertices}")
    if k < 1:
        raise ValueError("k must be at least 1")
    if n == 0:
        raise ValueError("empty vertex set")
    if n == 1:
        return Solution(frozenset({0}), 0, 0, k, "brute-force")

    gadj = _masks(instance.g)
    hadj = [_masks(h) for h in instance.layers]
    candidates = []
    for s in range(1, 1 << n):
        if s & (s - 1) == 0:
            continue
        obj = min(_min_deg(h, s) for h in hadj)
        candidates.append((-obj, -s.bit_count(), s))
    candidates.sort()
    for neg_obj, _, s in candidates:
        if _k_connected(gadj, s, k):
            lam = _min_cut_mask(gadj, s)
            return Solution(_to_set(s), -neg_obj, lam, k, "brute-force")
    return NoSolution(k, "brute-force")


def brute_force_bff(layers: Sequence[Graph], objective: str,
                    budget: OracleBudget = DEFAULT_BUDGET):
    """Exhaustive maximum over nonempty subsets.

    ``"MM"``: ``min_t`` minimum induced degree (an ``int``).
    ``"AA"``: ``sum_t`` average induced degree (a ``Fraction``).
    """
    if not layers:
        raise ValueError("need at least one layer")
    n = layers[0].n
    if n > budget.max_subset_vertices:
        raise BudgetExceeded(f"n={n} exceeds subset budget {budget.max_subset_vertices}")
    adjs = [_masks(h) for h in layers]
    best = None
    for s in range(1, 1 << n):
        if objective == "MM":
            value = min(_min_deg(a, s) for a in adjs)
        elif objective == "AA":
            size = s.bit_count()
            twice_edges = sum((a[v] & s).bit_count() for a in adjs for v in _bits(s))
            value = Fraction(twice_edges, size)
        else:
            raise ValueError(f"unknown objective {objective!r}")
        if best is None or value > best:
            best = value
    return best
