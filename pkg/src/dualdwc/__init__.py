"""Dense and k-edge-connected subgraphs in dual graphs."""
from .graph import DualInstance, Graph, induced_subgraph, min_degree, degree_sequence
from .solver import NoSolution, Solution, dual_dwc_fast, dual_dwc_naive, solve, sweep

__all__ = [
    "DualInstance",
    "Graph",
    "NoSolution",
    "Solution",
    "degree_sequence",
    "dual_dwc_fast",
    "dual_dwc_naive",
    "induced_subgraph",
    "min_degree",
    "solve",
    "sweep",
]
__version__ = "0.1.0"
