import pytest
from hypothesis import strategies as st

from dualdwc.graph import DualInstance, Graph, complete_graph, disjoint_union, with_edges

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture
def two_k4_bridge():
    return with_edges(disjoint_union(complete_graph(4), complete_graph(4)), [(3, 4)])


@pytest.fixture
def triangles_bridge():
    """Triangles {0,1,2} and {3,4,5} joined by the edge {2,3}."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@pytest.fixture
def triangles_instance(triangles_bridge):
    # H: triangle on {3,4,5} plus the path 0-1-2
    h = Graph(6, [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2)])
    return DualInstance.pair(triangles_bridge, h)


@pytest.fixture
def k4_instance():
    return DualInstance.pair(complete_graph(4), complete_graph(4))
