"""Command-line interface.

Exit status: 0 on success (a solution was found, where that applies),
2 when the solver reports NO SOLUTION, 1 on any error including bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path

from . import baselines, generators, oracle, readwrite
from .connectivity import decompose_kecc
from .graph import DualInstance
from .metrics import STATS_COLUMNS, stats
from .solver import ALGORITHMS, Solution, solve, sweep

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_SOLUTION = 2

SWEEP_COLUMNS = ("method", "k", "status", "size", "objective", "lambda_g") + STATS_COLUMNS[1:]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {value}")
    return value


def _emit(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _add_instance_args(p):
    p.add_argument("-g", "--graph-g", required=True, help="edge list of the connectivity graph")
    p.add_argument("-h", "--graph-h", help="edge list of the density graph")
    p.add_argument("--layers", nargs="+", default=[], metavar="PATH",
                   help="further density layers (objective is the minimum over all layers)")
    p.add_argument("--align", choices=readwrite.POLICIES, default="intersection")


def _load(args) -> DualInstance:
    density = ([args.graph_h] if args.graph_h else []) + list(args.layers)
    if not density:
        raise UsageError("give a density graph with -h/--graph-h or --layers")
    return readwrite.load_instance([args.graph_g, *density], args.align)


def _subparser(sub, name, help_text):
    p = sub.add_parser(name, help=help_text, add_help=False)
    p.add_argument("--help", action="help", help="show this help message and exit")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualdwc", description="Dense and k-edge-connected subgraphs in dual graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = _subparser(sub, "solve", "best set for one connectivity requirement k")
    _add_instance_args(p)
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="fast")
    p.add_argument("--format", choices=readwrite.FORMATS, default="json")
    p.add_argument("--pair", default="G/H", help="pair name used in csv output")
    p.add_argument("--output", "-o")

    p = _subparser(sub, "sweep", "solve for a range of k values")
    _add_instance_args(p)
    p.add_argument("-k", type=_positive, nargs="+", dest="k_values")
    p.add_argument("--k-min", type=_positive)
    p.add_argument("--k-max", type=_positive)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="fast")
    p.add_argument("--baselines", action="store_true", help="add BFF-MM, BFF-AA and k-CCO rows")
    p.add_argument("--output", "-o")

    p = _subparser(sub, "decompose", "maximal k-edge-connected components of one graph")
    p.add_argument("-g", "--graph-g", required=True)
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--algorithm", choices=("certificate", "mincut"), default="certificate")
    p.add_argument("--output", "-o")

    p = _subparser(sub, "gen", "write seeded synthetic edge lists")
    p.add_argument("model", choices=("paper-sbm", "sbm", "gnp"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, help="gnp: vertex count")
    p.add_argument("--p", type=_probability, help="gnp: edge probability")
    p.add_argument("--sizes", type=_positive, nargs="+", help="sbm: block sizes")
    p.add_argument("--intra", type=_probability, nargs="+", help="sbm: per-block probabilities")
    p.add_argument("--inter", type=_probability, help="sbm: inter-block probability")
    p.add_argument("--stream", type=int, default=0)
    p.add_argument("--output", "-o", required=True,
                   help="directory (paper-sbm) or file (sbm, gnp)")

    p = _subparser(sub, "stats", "subgraph statistics row")
    p.add_argument("-g", "--graph-g", required=True, help="edge list of the graph to measure")
    p.add_argument("--nodes", help="file with one label per line (default: every vertex)")
    p.add_argument("--output", "-o")

    p = _subparser(sub, "baseline", "run one competitor method")
    _add_instance_args(p)
    p.add_argument("--method", choices=("bff-mm", "bff-aa", "kcco"), required=True)
    p.add_argument("-k", type=_positive, help="k-CCO core order")
    p.add_argument("--output", "-o")

    p = _subparser(sub, "verify", "compare both solvers with exhaustive search on a small instance")
    p.add_argument("-g", "--graph-g")
    p.add_argument("-h", "--graph-h")
    p.add_argument("--layers", nargs="+", default=[], metavar="PATH")
    p.add_argument("--align", choices=readwrite.POLICIES, default="intersection")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=_probability, default=0.4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-k", type=_positive, nargs="+", dest="k_values", default=[1, 2, 3])
    return parser


def cmd_solve(args) -> int:
    instance = _load(args)
    outcome = solve(instance, args.k, args.algorithm)
    _emit(readwrite.write_result(outcome, args.format, instance, args.pair), args.output)
    return EXIT_OK if isinstance(outcome, Solution) else EXIT_NO_SOLUTION


def _sweep_k_values(args) -> list[int]:
    if args.k_values and (args.k_min or args.k_max):
        raise UsageError("use either -k or --k-min/--k-max")
    if args.k_values:
        return args.k_values
    if not (args.k_min and args.k_max):
        raise UsageError("sweep needs -k values or both --k-min and --k-max")
    if args.k_min > args.k_max:
        raise UsageError("--k-min exceeds --k-max")
    return list(range(args.k_min, args.k_max + 1))


def _sweep_row(method, k, nodes, objective, lam, layer):
    if not nodes:
        return [method, k, "no_solution", "", "", ""] + [""] * (len(STATS_COLUMNS) - 1)
    s = stats(layer, nodes)
    if isinstance(objective, Fraction):
        objective = f"{float(objective):.4f}"
    return [method, k, "solution", len(nodes), objective, lam] + s.row()[1:]


def cmd_sweep(args) -> int:
    k_values = _sweep_k_values(args)
    instance = _load(args)
    h = instance.layers[0]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    fixed = []
    if args.baselines:
        fixed.append(("bff-mm", baselines.bff_mm(instance.g, h)))
        if instance.g.m + h.m:
            fixed.append(("bff-aa", baselines.bff_aa(instance.g, h)))
    for k, outcome in sweep(instance, k_values, args.algorithm):
        if isinstance(outcome, Solution):
            writer.writerow(_sweep_row("dual-dwc", k, outcome.nodes, outcome.objective,
                                       outcome.achieved_connectivity, h))
        else:
            writer.writerow(_sweep_row("dual-dwc", k, None, None, None, h))
        if not args.baselines:
            continue
        for name, r in fixed + [("kcco", baselines.kcco(instance.g, h, k))]:
            if r is None:
                writer.writerow(_sweep_row(name, k, None, None, None, h))
            else:
                writer.writerow(_sweep_row(name, k, r.nodes, r.objective, r.achieved_connectivity, h))
    _emit(buf.getvalue().encode(), args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    lg = readwrite.read_edge_list(args.graph_g)
    dec = decompose_kecc(lg.graph, args.k, args.algorithm)
    lines = []
    for comp in dec.components:
        labels = sorted(lg.labels[v] for v in comp)
        lines.append(" ".join([str(len(comp))] + labels))
    lines.append(f"leftovers {len(dec.leftovers)}")
    _emit(("\n".join(lines) + "\n").encode(), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.model == "paper-sbm":
        instance, blocks = generators.gen_paper_sbm_pair(args.seed)
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        (out / "g.el").write_bytes(readwrite.write_edge_list(instance.g, instance.labels))
        (out / "h.el").write_bytes(readwrite.write_edge_list(instance.h, instance.labels))
        (out / "blocks.txt").write_text(
            "".join(f"{lab} {b + 1}\n" for lab, b in zip(instance.labels, blocks)))
        return EXIT_OK
    if args.model == "gnp":
        if args.n is None or args.p is None:
            raise UsageError("gnp needs --n and --p")
        graph = generators.gen_gnp(args.n, args.p, args.seed, args.stream)
    else:
        if not args.sizes or not args.intra or args.inter is None:
            raise UsageError("sbm needs --sizes, --intra and --inter")
        spec = generators.SbmSpec(tuple(args.sizes), tuple(args.intra), args.inter,
                                  args.seed, args.stream)
        graph, _ = generators.gen_sbm(spec)
    Path(args.output).write_bytes(readwrite.write_edge_list(graph))
    return EXIT_OK


def cmd_stats(args) -> int:
    lg = readwrite.read_edge_list(args.graph_g)
    if args.nodes:
        index = {lab: i for i, lab in enumerate(lg.labels)}
        wanted = []
        for line in Path(args.nodes).read_text().splitlines():
            lab = line.strip()
            if not lab or lab.startswith("#"):
                continue
            if lab not in index:
                raise UsageError(f"{args.nodes}: unknown label {lab!r}")
            wanted.append(index[lab])
    else:
        wanted = range(lg.graph.n)
    s = stats(lg.graph, wanted)
    text = ",".join(STATS_COLUMNS) + "\n" + ",".join(s.row()) + "\n"
    _emit(text.encode(), args.output)
    return EXIT_OK


def cmd_baseline(args) -> int:
    instance = _load(args)
    g, h = instance.g, instance.layers[0]
    if args.method == "bff-mm":
        result = baselines.bff_mm(g, h)
    elif args.method == "bff-aa":
        result = baselines.bff_aa(g, h)
    else:
        if args.k is None:
            raise UsageError("kcco needs -k")
        result = baselines.kcco(g, h, args.k)
    if result is None:
        _emit(readwrite._json({"method": args.method, "k": args.k, "status": "no_solution"}), args.output)
        return EXIT_NO_SOLUTION
    objective = result.objective
    if isinstance(objective, Fraction) and objective.denominator == 1:
        objective = int(objective)
    _emit(readwrite._json({
        "method": result.method,
        "status": "solution",
        "objective": objective if isinstance(objective, int) else str(objective),  # exact "a/b"
        "lambda_g": result.achieved_connectivity,
        "size": len(result.nodes),
        "nodes": [instance.labels[v] for v in sorted(result.nodes)],
    }), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.graph_g:
        instance = _load(args)
    else:
        instance = generators.gen_gnp_pair(args.n, args.p, args.p, args.seed)
    ok = True
    for k in args.k_values:
        expected = oracle.brute_force_dual_dwc(instance, k)
        for algorithm in ALGORITHMS:
            got = solve(instance, k, algorithm)
            match = got.found == expected.found and got.objective == expected.objective
            if got.found and match:
                gadj = oracle._masks(instance.g)
                mask = sum(1 << v for v in got.nodes)
                match = len(got.nodes) == 1 or oracle._k_connected(gadj, mask, k)
            ok &= match
            print(f"k={k} {algorithm}: objective={got.objective} oracle={expected.objective} "
                  f"{'ok' if match else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_ERROR


COMMANDS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "decompose": cmd_decompose,
    "gen": cmd_gen,
    "stats": cmd_stats,
    "baseline": cmd_baseline,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"dualdwc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"dualdwc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
