import json

import pytest
from hypothesis import given, settings

from dualdwc.graph import DualInstance, complete_graph
from dualdwc.readwrite import (
    CSV_HEADER,
    EdgeListError,
    build_instance,
    load_instance,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
    write_result,
)
from dualdwc.solver import NoSolution, dual_dwc_fast

from conftest import graphs


def test_parse_examples():
    lg = parse_edge_list(b"a b\nb c\n")
    assert lg.graph.n == 3 and lg.graph.m == 2 and lg.labels == ("a", "b", "c")
    lg = parse_edge_list(b"a b\na b\nb a\n")
    assert lg.graph.n == 2 and lg.graph.m == 1
    lg = parse_edge_list("# header\n\n  x   y  \n")
    assert lg.labels == ("x", "y") and lg.graph.m == 1


@pytest.mark.parametrize("text, line", [
    (b"a a\n", 1),
    (b"a b\nb c d\n", 2),
    (b"# c\na b\n\nlonely\n", 4),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text, "g.el")
    assert info.value.line == line
    assert f"g.el:{line}" in str(info.value)


def test_parse_rejects_bad_utf8():
    with pytest.raises(EdgeListError):
        parse_edge_list(b"\xff\xfe b\n")


def test_read_missing_file(tmp_path):
    with pytest.raises(EdgeListError):
        read_edge_list(tmp_path / "nope.el")


def _abc_bcd():
    g = parse_edge_list(b"a b\nb c\na c\n")
    h = parse_edge_list(b"b c\nc d\nb d\n")
    return g, h


def test_intersection_alignment():
    inst = build_instance(_abc_bcd(), "intersection")
    assert inst.labels == ("b", "c")
    assert list(inst.g.edges()) == [(0, 1)] and list(inst.h.edges()) == [(0, 1)]
    assert inst.common_nodes == 2


def test_union_alignment():
    inst = build_instance(_abc_bcd(), "union")
    assert inst.labels == ("a", "b", "c", "d")
    assert inst.g.degree(3) == 0 and inst.h.degree(0) == 0
    assert inst.g.m == 3 and inst.h.m == 3
    assert inst.common_nodes == 2


def test_alignment_errors():
    g = parse_edge_list(b"a b\n")
    h = parse_edge_list(b"c d\n")
    with pytest.raises(ValueError):
        build_instance([g, h], "intersection")
    with pytest.raises(ValueError):
        build_instance([g], "intersection")
    with pytest.raises(ValueError):
        build_instance([g, h], "outer")


def test_load_multi_layer(tmp_path):
    for name, text in [("g", "a b\nb c\n"), ("h1", "a b\n"), ("h2", "b c\n")]:
        (tmp_path / f"{name}.el").write_text(text)
    inst = load_instance([tmp_path / "g.el", tmp_path / "h1.el", tmp_path / "h2.el"], "union")
    assert len(inst.layers) == 2 and inst.labels == ("a", "b", "c")


def test_write_result_no_solution():
    inst = DualInstance.pair(complete_graph(4), complete_graph(4))
    none = NoSolution(3, "fast")
    assert write_result(none, "json", inst) == b'{"k":3,"status":"no_solution"}\n'
    assert write_result(none, "nodes", inst) == b"# no_solution\n"
    rows = write_result(none, "csv", inst).decode().splitlines()
    assert rows[1].startswith("G/H,3,no_solution")


def test_write_result_solution(k4_instance):
    res = dual_dwc_fast(k4_instance, 3)
    assert write_result(res, "nodes", k4_instance).decode().splitlines() == ["0", "1", "2", "3"]
    data = json.loads(write_result(res, "json", k4_instance))
    assert data["k"] == 3 and data["status"] == "solution" and data["lambda_g"] == 3
    assert data["nodes"] == ["0", "1", "2", "3"] and data["objective"] == 3
    assert data["stats"][0]["triangles"] == 4
    rows = write_result(res, "csv", k4_instance).decode().splitlines()
    assert rows[0] == "pair,k,nodes,min_deg,max_deg,avg_deg,diameter,triangles,avg_shortest_path"
    assert rows[0].split(",") == list(CSV_HEADER)
    assert rows[1] == "G/H,3,4,3,3,3.0,1,4,1.0"
    with pytest.raises(ValueError):
        write_result(res, "xml", k4_instance)


def test_csv_one_row_per_layer():
    inst = DualInstance(complete_graph(4), (complete_graph(4), complete_graph(4)))
    rows = write_result(dual_dwc_fast(inst, 2), "csv", inst, pair="X").decode().splitlines()
    assert [r.split(",")[0] for r in rows[1:]] == ["X#1", "X#2"]


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_round_trip(g):
    labels = [f"v{i}" for i in range(g.n)]
    back = parse_edge_list(write_edge_list(g, labels))
    original = {frozenset((labels[u], labels[v])) for u, v in g.edges()}
    parsed = {frozenset((back.labels[u], back.labels[v])) for u, v in back.graph.edges()}
    assert parsed == original
