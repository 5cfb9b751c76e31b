import pytest

from dualdwc.graph import DualInstance, Graph, complete_graph, cycle_graph, path_graph, with_edges
from dualdwc.oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_force_bff,
    brute_force_dual_dwc,
    brute_force_edge_connectivity,
    brute_force_kecc,
    brute_force_min_cut,
    brute_force_st_cut,
)


def test_dual_dwc_examples(k4_instance, triangles_instance):
    assert brute_force_dual_dwc(k4_instance, 3).objective == 3
    assert brute_force_dual_dwc(triangles_instance, 2).objective == 2
    res = brute_force_dual_dwc(DualInstance.pair(path_graph(4), Graph(4)), 1)
    assert res.objective == 0 and res.nodes == frozenset(range(4))


def test_min_cut_examples(two_k4_bridge):
    assert brute_force_min_cut(cycle_graph(5)) == 2
    assert brute_force_min_cut(complete_graph(4)) == 3
    assert brute_force_min_cut(two_k4_bridge) == 1
    assert brute_force_edge_connectivity(Graph(3, [(0, 1)])) == 0
    assert brute_force_st_cut(cycle_graph(6), 0, 3) == 2


def test_bff_examples():
    assert brute_force_bff([complete_graph(4), complete_graph(4)], "MM") == 3
    assert brute_force_bff([complete_graph(3), complete_graph(3)], "AA") == 4
    k4p = with_edges(complete_graph(4), [(0, 4)], n=5)
    assert brute_force_bff([k4p, complete_graph(5)], "MM") == 3
    with pytest.raises(ValueError):
        brute_force_bff([k4p], "XY")


def test_kecc_example(triangles_bridge):
    assert brute_force_kecc(triangles_bridge, 1) == [frozenset(range(6))]
    assert brute_force_kecc(triangles_bridge, 3) == []


def test_budgets():
    tiny = OracleBudget(max_subset_vertices=4, max_cut_vertices=3)
    with pytest.raises(BudgetExceeded):
        brute_force_min_cut(complete_graph(4), tiny)
    with pytest.raises(BudgetExceeded):
        brute_force_dual_dwc(DualInstance.pair(complete_graph(5), complete_graph(5)), 1, tiny)
    with pytest.raises(BudgetExceeded):
        brute_force_bff([complete_graph(16)], "MM")
    with pytest.raises(BudgetExceeded):
        brute_force_min_cut(complete_graph(13))
    assert isinstance(BudgetExceeded("x"), ValueError)
