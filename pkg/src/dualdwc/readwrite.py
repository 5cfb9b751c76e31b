"""Edge-list files, label alignment across layers, and result serialisation.

Edge-list format: one edge per line as two whitespace-separated labels.
Blank lines and lines starting with ``#`` are skipped.  Repeated edges are
merged; a self-loop is an error.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .graph import DualInstance, Graph
from .metrics import STATS_COLUMNS, stats
from .solver import NoSolution, Solution

POLICIES = ("intersection", "union")
FORMATS = ("json", "csv", "nodes")
CSV_HEADER = ("pair", "k") + STATS_COLUMNS


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]


def parse_edge_list(data: bytes | str, source: str = "<input>") -> LabeledGraph:
    """Parse an edge list; vertex ids follow first appearance of each label."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EdgeListError(f"not valid UTF-8 ({exc.reason})", None, source) from None
    ids: dict[str, int] = {}
    edges = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListError(f"expected 2 labels, found {len(tokens)}", lineno, source)
        a, b = tokens
        if a == b:
            raise EdgeListError(f"self-loop on {a!r}", lineno, source)
        for label in tokens:
            if label not in ids:
                ids[label] = len(ids)
        edges.append((ids[a], ids[b]))
    return LabeledGraph(Graph(len(ids), edges), tuple(ids))


def read_edge_list(path: str | Path) -> LabeledGraph:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise EdgeListError(exc.strerror or str(exc), None, str(path)) from None
    return parse_edge_list(data, str(path))


def write_edge_list(graph: Graph, labels: Sequence[str] | None = None) -> bytes:
    if labels is None:
        labels = [str(v) for v in range(graph.n)]
    return "".join(f"{labels[u]} {labels[v]}\n" for u, v in graph.edges()).encode()


def build_instance(layers: Sequence[LabeledGraph], policy: str = "intersection") -> DualInstance:
    """Align ``layers[0]`` (the connectivity graph) and the density layers on one vertex universe.

    ``intersection`` keeps labels present in every file, ordered as in the
    first file; ``union`` keeps every label in order of first appearance,
    leaving a vertex isolated in layers that never mention it.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown alignment policy {policy!r}; expected one of {POLICIES}")
    if len(layers) < 2:
        raise ValueError("need the connectivity graph and at least one density layer")

    label_sets = [set(lg.labels) for lg in layers]
    common = set.intersection(*label_sets)
    if policy == "intersection":
        universe = [lab for lab in layers[0].labels if lab in common]
    else:
        universe = list(dict.fromkeys(lab for lg in layers for lab in lg.labels))
    if not universe:
        raise ValueError("aligned vertex universe is empty")

    index = {lab: i for i, lab in enumerate(universe)}
    graphs = []
    for lg in layers:
        edges = []
        for u, v in lg.graph.edges():
            a, b = index.get(lg.labels[u]), index.get(lg.labels[v])
            if a is not None and b is not None:
                edges.append((a, b))
        graphs.append(Graph(len(universe), edges))
    return DualInstance(graphs[0], tuple(graphs[1:]), tuple(universe), common_nodes=len(common))


def load_instance(paths: Sequence[str | Path], policy: str = "intersection") -> DualInstance:
    return build_instance([read_edge_list(p) for p in paths], policy)


def _json(obj) -> bytes:
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode()


def write_result(outcome: Solution | NoSolution, fmt: str, instance: DualInstance,
                 pair: str = "G/H") -> bytes:
    """Serialise a solve outcome as ``json``, ``csv`` (one row per density layer) or ``nodes``."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    found = isinstance(outcome, Solution)
    nodes = sorted(outcome.nodes) if found else []
    labels = [instance.labels[v] for v in nodes]
    layer_stats = [stats(h, nodes) for h in instance.layers] if found else []

    if fmt == "json":
        if not found:
            return _json({"k": outcome.k, "status": "no_solution"})
        return _json({
            "k": outcome.k,
            "status": "solution",
            "algorithm": outcome.algorithm,
            "objective": outcome.objective,
            "lambda_g": outcome.achieved_connectivity,
            "size": len(nodes),
            "nodes": labels,
            "stats": [s.as_dict() for s in layer_stats],
        })

    if fmt == "nodes":
        if not found:
            return b"# no_solution\n"
        return "".join(f"{lab}\n" for lab in labels).encode()

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    if not found:
        writer.writerow([pair, outcome.k, "no_solution"] + [""] * (len(STATS_COLUMNS) - 1))
    for t, s in enumerate(layer_stats):
        name = pair if len(layer_stats) == 1 else f"{pair}#{t + 1}"
        writer.writerow([name, outcome.k] + s.row())
    return buf.getvalue().encode()
