import networkx as nx
import pytest
from hypothesis import strategies as st

from sqconn.graph import Graph, build_graph, cycle_graph, path_graph, petersen_graph


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if connected:
        # thread a random spanning tree through the vertices
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            parent = draw(st.integers(min_value=0, max_value=i - 1))
            edges.append((order[parent], order[i]))
    return build_graph(n, edges)
