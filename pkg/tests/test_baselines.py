from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dualdwc.baselines import BaselineResult, bff_aa, bff_mm, connectivity_profile, kcco
from dualdwc.graph import Graph, complete_graph, connected_components, cycle_graph, with_edges
from dualdwc.oracle import brute_force_bff

from conftest import graphs


def _k4_pendant():
    return with_edges(complete_graph(4), [(0, 4)], n=5)


def _union_density(g, h, nodes):
    edges = sum(1 for layer in (g, h) for u, v in layer.edges() if u in nodes and v in nodes)
    return Fraction(2 * edges, len(nodes))


def test_bff_aa_examples():
    res = bff_aa(complete_graph(3), complete_graph(3))
    assert res.nodes == frozenset(range(3)) and res.objective == 4
    res = bff_aa(_k4_pendant(), Graph(5))
    assert res.nodes == frozenset(range(4)) and res.objective == 3
    res = bff_aa(cycle_graph(4), cycle_graph(4))
    assert res.nodes == frozenset(range(4)) and res.objective == 4
    assert res.achieved_connectivity == 2


def test_bff_aa_rejects_edgeless_union():
    with pytest.raises(ValueError):
        bff_aa(Graph(4), Graph(4))


def test_bff_mm_wraps_peeling():
    res = bff_mm(complete_graph(4), complete_graph(4))
    assert res == BaselineResult("bff-mm", frozenset(range(4)), 3, 3)


def test_kcco_examples():
    assert kcco(complete_graph(4), complete_graph(4), 3).nodes == frozenset(range(4))
    assert kcco(complete_graph(4), Graph(4, [(0, 1), (2, 3)]), 2) is None
    assert kcco(cycle_graph(5), cycle_graph(5), 2).nodes == frozenset(range(5))
    with pytest.raises(ValueError):
        kcco(cycle_graph(5), cycle_graph(5), 0)


def test_connectivity_profile_examples(two_k4_bridge):
    results = [
        BaselineResult("a", frozenset(range(4)), 0, 0),
        BaselineResult("b", frozenset({0, 5}), 0, 0),
        BaselineResult("c", frozenset(range(8)), 0, 0),
        BaselineResult("d", frozenset({6}), 0, 0),
    ]
    assert connectivity_profile(results, two_k4_bridge) == [("a", 3), ("b", 0), ("c", 1), ("d", 0)]


@st.composite
def pairs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    return draw(graphs(min_n=n, max_n=n)), draw(graphs(min_n=n, max_n=n))


@settings(max_examples=120, deadline=None)
@given(pairs())
def test_bff_aa_matches_enumeration(pair):
    g, h = pair
    if g.m + h.m == 0:
        return
    res = bff_aa(g, h)
    assert res.objective == brute_force_bff([g, h], "AA")
    assert res.objective == _union_density(g, h, res.nodes)
    # no single deletion helps
    if len(res.nodes) > 1:
        for v in res.nodes:
            assert _union_density(g, h, res.nodes - {v}) <= res.objective


@settings(max_examples=120, deadline=None)
@given(pairs(), st.integers(1, 3))
def test_kcco_constraints(pair, k):
    g, h = pair
    res = kcco(g, h, k)
    if res is None:
        return
    s = res.nodes
    assert min(sum(1 for u in g.adj[v] if u in s) for v in s) >= k
    assert len(connected_components(g, s)) == 1
    assert len(connected_components(h, s)) == 1
    assert res.objective == len(s)
