"""Exact solver: maximise the minimum degree in the density layer(s) over
vertex sets that are k-edge-connected in ``g``.

The recursion alternates two moves.  While the current set is
k-edge-connected, peel its minimum-degree vertex and remember the set; once
it is not, split it into maximal k-edge-connected components and solve each
one.  A component's answer is the best set on its peeling chain (the
shallowest, i.e. largest, on ties) or the best answer among its
sub-components (the first on ties).

Both the peeling chain and the component recursion run on an explicit work
stack, so neither is bounded by the interpreter's recursion limit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .connectivity import decompose_within, edge_connectivity, edge_connectivity_at_least
from .graph import DualInstance, induced_subgraph
from .peeling import kcore_multi, min_degree_vertex_multi

ALGORITHMS = ("fast", "naive")


@dataclass(frozen=True)
class Solution:
    nodes: frozenset[int]
    objective: int
    achieved_connectivity: int
    k: int
    algorithm: str
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def found(self) -> bool:
        return True


@dataclass(frozen=True)
class NoSolution:
    k: int
    algorithm: str = ""
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def found(self) -> bool:
        return False

    @property
    def objective(self):
        return None


class _Frame:
    __slots__ = ("chain", "parent", "slot", "pending", "results", "depth")

    def __init__(self, parent, slot, depth):
        self.chain: list[tuple[frozenset[int], int]] = []
        self.parent = parent
        self.slot = slot
        self.pending = 0
        self.results: list = []
        self.depth = depth


def _best_of_chain(chain, terminal):
    # walk back up the peeling chain: a deeper set wins only if strictly better
    best = terminal
    for s, d in reversed(chain):
        if best is None or best[1] <= d:
            best = (s, d)
    return best


def _run(instance: DualInstance, k: int, fast: bool):
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    g, layers = instance.g, instance.layers
    if g.n == 0:
        raise ValueError("empty vertex set")
    method = "certificate" if fast else "mincut"
    counters = {"calls": 0, "decompositions": 0, "peels": 0, "max_depth": 0}

    root = _Frame(None, None, 0)
    answer = []

    def finish(frame, terminal):
        while True:
            result = _best_of_chain(frame.chain, terminal)
            parent = frame.parent
            if parent is None:
                answer.append(result)
                return
            parent.results[frame.slot] = result
            parent.pending -= 1
            if parent.pending:
                return
            terminal = None
            for r in parent.results:
                if r is not None and (terminal is None or r[1] > terminal[1]):
                    terminal = r
            frame = parent

    work = [(g.vertices(), root)]
    while work:
        current, frame = work.pop()
        while True:
            counters["calls"] += 1
            if not current:
                finish(frame, None)
                break
            if len(current) == 1:
                finish(frame, (current, 0))
                break

            if fast:
                dec = decompose_within(g, current, k, method)
                connected = len(dec.components) == 1 and dec.components[0] == current
            else:
                connected = edge_connectivity_at_least(induced_subgraph(g, current)[0], k, method)
                dec = None

            if connected:
                v, _, d = min_degree_vertex_multi(layers, current)
                frame.chain.append((current, d))
                counters["peels"] += 1
                counters["max_depth"] = max(counters["max_depth"], frame.depth + len(frame.chain))
                current = current - {v}
                if fast:
                    # anything strictly better than d lives in the (d+1)-core of every layer
                    current = kcore_multi(layers, current, d + 1)
                continue

            if dec is None:
                dec = decompose_within(g, current, k, method)
            counters["decompositions"] += 1
            if not dec.components:
                finish(frame, None)
                break
            frame.pending = len(dec.components)
            frame.results = [None] * len(dec.components)
            for i, comp in enumerate(dec.components):
                child = _Frame(frame, i, frame.depth + len(frame.chain) + 1)
                counters["max_depth"] = max(counters["max_depth"], child.depth)
                work.append((comp, child))
            break

    algorithm = "fast" if fast else "naive"
    result = answer[0]
    if result is None:
        return NoSolution(k, algorithm, counters)
    nodes, objective = result
    lam = edge_connectivity(induced_subgraph(g, nodes)[0], method) if len(nodes) > 1 else 0
    return Solution(frozenset(nodes), objective, lam, k, algorithm, counters)


def dual_dwc_naive(instance: DualInstance, k: int) -> Solution | NoSolution:
    """Direct transcription of the recursion: one vertex peeled per step,
    Stoer-Wagner for every connectivity question."""
    return _run(instance, k, fast=False)


def dual_dwc_fast(instance: DualInstance, k: int) -> Solution | NoSolution:
    """After peeling a vertex of degree ``d``, jump straight to the
    ``(d+1)``-core across all layers before re-testing connectivity."""
    return _run(instance, k, fast=True)


def solve(instance: DualInstance, k: int, algorithm: str = "fast") -> Solution | NoSolution:
    if algorithm == "fast":
        return dual_dwc_fast(instance, k)
    if algorithm == "naive":
        return dual_dwc_naive(instance, k)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def sweep(instance: DualInstance, k_values: Iterable[int],
          algorithm: str = "fast") -> list[tuple[int, Solution | NoSolution]]:
    k_values = list(k_values)
    if not k_values:
        raise ValueError("k_values must not be empty")
    return [(k, solve(instance, k, algorithm)) for k in k_values]
