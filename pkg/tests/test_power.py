import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from sqconn.graph import GraphError, complete_graph, cycle_graph, min_degree
from sqconn.power import all_pairs_distances, bfs_distances, diameter, distance, graph_power, square


def _matrix_square(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    reach = (a + a @ a) > 0
    np.fill_diagonal(reach, False)
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if reach[u, v]}


def test_square_of_path(p4):
    h = graph_power(p4, 2)
    assert h.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert min_degree(h) == 2


def test_square_of_complete():
    assert graph_power(complete_graph(6), 2) == complete_graph(6)


def test_square_of_c5():
    assert graph_power(cycle_graph(5), 2) == complete_graph(5)


def test_square_of_petersen(petersen):
    assert diameter(petersen) == 2
    assert graph_power(petersen, 2) == complete_graph(10)


def test_power_rejects_zero(p4):
    with pytest.raises(GraphError):
        graph_power(p4, 0)


def test_distance(p4, petersen):
    assert distance(p4, 0, 3) == 3
    assert distance(p4, 2, 2) == 0
    assert max(max(d.values()) for d in all_pairs_distances(petersen)) == 2
    with pytest.raises(GraphError):
        distance(p4, 0, 4)


def test_distance_unreachable():
    from sqconn.graph import build_graph

    assert distance(build_graph(3, [(0, 1)]), 0, 2) is None


@given(graphs(max_n=9))
def test_square_matches_matrix(g):
    if g.n == 0:
        return
    assert set(square(g).edges()) == _matrix_square(g)


@given(graphs(min_n=1, max_n=9))
def test_square_equals_bfs_power(g):
    # generic depth-limited BFS against the neighbourhood-union shortcut
    adj = [frozenset(u for u, d in bfs_distances(g, v, limit=2).items() if u != v) for v in range(g.n)]
    assert square(g).adj == tuple(adj)


@given(graphs(min_n=1, max_n=8))
def test_power_monotone(g):
    prev = graph_power(g, 1)
    assert prev == g
    for k in range(2, 5):
        cur = graph_power(g, k)
        assert set(prev.edges()) <= set(cur.edges())
        prev = cur


@given(graphs(min_n=2, max_n=8, connected=True))
def test_power_stabilises_at_diameter(g):
    d = diameter(g)
    full = graph_power(g, max(d, 1))
    assert full == complete_graph(g.n)
    assert graph_power(g, d + 2) == full


@given(graphs(min_n=2, max_n=9, connected=True))
def test_square_degree_gain(g):
    if g.is_complete():
        return
    assert min_degree(square(g)) >= min_degree(g) + 1
