import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from dualdwc.graph import Graph, complete_graph, cycle_graph, induced_subgraph, path_graph, without_edges
from dualdwc.metrics import stats, triangle_count

from conftest import graphs


def floyd_warshall(g):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for m in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def triple_triangles(g):
    return sum(1 for a, b, c in itertools.combinations(range(g.n), 3)
               if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))


def test_k5():
    s = stats(complete_graph(5), range(5))
    assert (s.nodes, s.min_deg, s.max_deg, s.avg_deg) == (5, 4, 4, 4)
    assert (s.diameter, s.triangles, s.avg_shortest_path, s.connected) == (1, 10, 1, True)
    assert s.row() == ["5", "4", "4", "4.0", "1", "10", "1.0"]


def test_c6():
    s = stats(cycle_graph(6), range(6))
    assert (s.min_deg, s.max_deg, s.avg_deg, s.diameter, s.triangles) == (2, 2, 2, 3, 0)
    # each vertex sees distances 1,1,2,2,3
    assert s.avg_shortest_path == Fraction(9, 5)
    d = floyd_warshall(cycle_graph(6))
    assert Fraction(sum(d[i][j] for i in range(6) for j in range(i + 1, 6)), 15) == Fraction(9, 5)


def test_disconnected_uses_largest_component():
    s = stats(path_graph(3), {0, 2})
    assert not s.connected and s.diameter == 0 and s.avg_shortest_path == 0
    s = stats(Graph(5, [(0, 1), (2, 3), (3, 4)]), range(5))
    assert not s.connected and s.diameter == 2 and s.avg_shortest_path == Fraction(4, 3)


def test_empty_rejected():
    with pytest.raises(ValueError):
        stats(complete_graph(3), [])


def test_triangle_examples():
    assert triangle_count(complete_graph(4)) == 4
    assert triangle_count(cycle_graph(5)) == 0
    assert triangle_count(without_edges(complete_graph(5), [(0, 1)])) == 7
    assert triangle_count(complete_graph(5), {0, 1, 2}) == 1
    for n in range(8):
        assert triangle_count(complete_graph(n)) == n * (n - 1) * (n - 2) // 6


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=14))
def test_stats_match_oracles(g):
    s = stats(g, range(g.n))
    assert s.triangles == triple_triangles(g)
    assert s.avg_deg == Fraction(2 * g.m, g.n)
    assert s.min_deg <= s.avg_deg <= s.max_deg
    d = floyd_warshall(g)
    # largest component, ties to the one with the smallest vertex
    comps = {}
    for v in range(g.n):
        comps.setdefault(frozenset(u for u in range(g.n) if d[v][u] < float("inf")), None)
    largest = sorted(comps, key=lambda c: (-len(c), min(c)))[0]
    members = sorted(largest)
    finite = [d[i][j] for i, j in itertools.combinations(members, 2)]
    assert s.diameter == max(finite, default=0)
    assert s.avg_shortest_path == (Fraction(sum(finite), len(finite)) if finite else 0)
    assert s.connected == (len(largest) == g.n)
    if s.connected:
        assert s.diameter >= s.avg_shortest_path


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_stats_on_subsets(g):
    s = set(range(0, g.n, 2))
    sub, _ = induced_subgraph(g, s)
    assert stats(g, s) == stats(sub, range(sub.n))
