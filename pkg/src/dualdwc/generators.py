"""Seeded random graphs: G(n, p) and stochastic block models.

Randomness comes from Philox4x64-10, a counter-based generator, keyed by
``seed + (stream << 64)``.  One uniform double is drawn per vertex pair, pairs
visited in lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)``, and the pair
becomes an edge when the draw is below its probability.  The same seed and
stream therefore give the same edge list on every platform.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import DualInstance, Graph

PAPER_BLOCKS = 5
PAPER_BLOCK_SIZE = 50
PAPER_G_INTER = 2e-4
PAPER_H_INTER = 0.1

_MASK64 = (1 << 64) - 1


def _rng(seed: int, stream: int = 0) -> np.random.Generator:
    key = (int(seed) & _MASK64) | ((int(stream) & _MASK64) << 64)
    return np.random.Generator(np.random.Philox(key=key))


def _check_prob(p, what="probability"):
    if not 0 <= p <= 1:
        raise ValueError(f"{what} must lie in [0, 1], got {p}")
    return float(Fraction(p)) if isinstance(p, Fraction) else float(p)


def _sample(n: int, row_probs, rng: np.random.Generator) -> Graph:
    # row_probs(i) -> probabilities for pairs (i, i+1 .. n-1)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n - 1):
        probs = row_probs(i)
        hits = np.flatnonzero(rng.random(n - 1 - i) < probs)
        if hits.size:
            js = (hits + (i + 1)).tolist()
            adj[i].extend(js)
            for j in js:
                adj[j].append(i)
    # rows are generated in increasing i, so every list is already sorted
    return Graph._from_adjacency(adj)


def gen_gnp(n: int, p: float, seed: int, stream: int = 0) -> Graph:
    """Erdos-Renyi graph: every pair is an edge independently with probability ``p``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = _check_prob(p)
    return _sample(n, lambda i: p, _rng(seed, stream))


@dataclass(frozen=True)
class SbmSpec:
    block_sizes: tuple[int, ...]
    intra: tuple[float, ...]
    inter: float
    seed: int = 0
    stream: int = 0

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(int(b) for b in self.block_sizes))
        object.__setattr__(self, "intra", tuple(_check_prob(p, "intra-block probability") for p in self.intra))
        object.__setattr__(self, "inter", _check_prob(self.inter, "inter-block probability"))
        if any(b <= 0 for b in self.block_sizes):
            raise ValueError("block sizes must be positive")
        if len(self.intra) != len(self.block_sizes):
            raise ValueError("need one intra-block probability per block")

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    def blocks(self) -> list[int]:
        return [b for b, size in enumerate(self.block_sizes) for _ in range(size)]


def gen_sbm(spec: SbmSpec) -> tuple[Graph, list[int]]:
    """Sample a stochastic block model; returns the graph and each vertex's block."""
    blocks = np.array(spec.blocks(), dtype=np.int64)
    table = np.full((len(spec.block_sizes),) * 2, spec.inter)
    np.fill_diagonal(table, spec.intra)
    n = spec.n

    def row_probs(i):
        return table[blocks[i], blocks[i + 1:]]

    return _sample(n, row_probs, _rng(spec.seed, spec.stream)), blocks.tolist()


def paper_sbm_specs(seed: int) -> tuple[SbmSpec, SbmSpec]:
    """The two block models of the ranging-connectivity experiment.

    Five blocks of 50.  In ``g`` block ``i`` (1-based) has density ``0.1 i``
    and inter-block density ``2e-4``; in ``h`` it has ``0.1 + 0.1 (5 - i)``
    and inter-block density ``0.1``.
    """
    sizes = (PAPER_BLOCK_SIZE,) * PAPER_BLOCKS
    g_intra = tuple(round(0.1 * i, 10) for i in range(1, PAPER_BLOCKS + 1))
    h_intra = tuple(round(0.1 + 0.1 * (PAPER_BLOCKS - i), 10) for i in range(1, PAPER_BLOCKS + 1))
    return (SbmSpec(sizes, g_intra, PAPER_G_INTER, seed, stream=0),
            SbmSpec(sizes, h_intra, PAPER_H_INTER, seed, stream=1))


def gen_paper_sbm_pair(seed: int) -> tuple[DualInstance, list[int]]:
    """Dual instance of the ranging-connectivity experiment and the block of each vertex."""
    g_spec, h_spec = paper_sbm_specs(seed)
    g, blocks = gen_sbm(g_spec)
    h, _ = gen_sbm(h_spec)
    return DualInstance.pair(g, h), blocks


def gen_gnp_pair(n: int, p_g: float, p_h: float, seed: int) -> DualInstance:
    """Two independent G(n, p) layers drawn from streams 0 and 1 of ``seed``."""
    return DualInstance.pair(gen_gnp(n, p_g, seed, 0), gen_gnp(n, p_h, seed, 1))
