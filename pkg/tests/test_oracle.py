from itertools import combinations

import numpy as np
import pytest

from sqconn.connectivity import disconnects, edge_connectivity, separates, vertex_connectivity
from sqconn.graph import GraphError, build_graph, complete_graph, cycle_graph, star_graph
from sqconn.oracle import (
    batch_metrics,
    brute_edge_connectivity,
    brute_vertex_connectivity,
    count_connected_labeled,
    cut_edges_brute,
    enumerate_connected_graphs,
    graph_from_mask,
    pair_list,
)
from sqconn.power import square


def test_brute_edge_connectivity(c6, p4):
    assert brute_edge_connectivity(c6)[0] == 2
    assert brute_edge_connectivity(complete_graph(5))[0] == 4
    value, side = brute_edge_connectivity(square(p4))
    assert value == 2
    assert 0 in side and cut_edges_brute(square(p4), side) == 2


def test_brute_edge_connectivity_cap():
    with pytest.raises(GraphError):
        brute_edge_connectivity(complete_graph(21))
    with pytest.raises(GraphError):
        brute_edge_connectivity(complete_graph(5), cap=4)


def test_brute_vertex_connectivity(petersen):
    assert brute_vertex_connectivity(complete_graph(4)) == (3, None)
    assert brute_vertex_connectivity(star_graph(3)) == (1, frozenset({0}))
    value, sep = brute_vertex_connectivity(petersen)
    assert value == 3 and separates(petersen, sep)
    with pytest.raises(GraphError):
        brute_vertex_connectivity(cycle_graph(17))


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_connected_graphs(1)) == 1
    three = list(enumerate_connected_graphs(3))
    assert len(three) == 4
    assert sorted(g.m for g in three) == [2, 2, 2, 3]
    assert sum(1 for _ in enumerate_connected_graphs(4)) == count_connected_labeled(4) == 38
    assert sum(1 for _ in enumerate_connected_graphs(5)) == count_connected_labeled(5) == 728


def test_enumeration_unique():
    seen = {tuple(g.edges()) for g in enumerate_connected_graphs(5)}
    assert len(seen) == 728


def test_enumeration_cap():
    with pytest.raises(GraphError):
        next(enumerate_connected_graphs(9))


def test_graph_from_mask():
    pairs = pair_list(4)
    assert pairs[0] == (0, 1)
    g = graph_from_mask(4, 0b111111, pairs)
    assert g == complete_graph(4)


def test_oracles_agree_with_algorithms_random():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(2, 10))
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.45]
        g = build_graph(n, edges)
        lam, side = brute_edge_connectivity(g)
        assert lam == edge_connectivity(g)[0]
        if lam:
            assert disconnects(g, [(u, v) for u, v in g.edges() if (u in side) != (v in side)])
        kappa, sep = brute_vertex_connectivity(g)
        assert kappa == vertex_connectivity(g)[0]
        if sep:
            assert separates(g, sep)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_batch_metrics_match_per_graph(n):
    bm = batch_metrics(n)
    graphs = list(enumerate_connected_graphs(n))
    assert len(bm.masks) == len(graphs)
    for i, g in enumerate(graphs):
        assert graph_from_mask(n, int(bm.masks[i])) == g
        h = square(g)
        assert bm.delta[i] == min(g.degrees)
        assert bm.lam[i] == brute_edge_connectivity(g)[0]
        assert bm.kappa[i] == brute_vertex_connectivity(g)[0]
        assert bm.delta_sq[i] == min(h.degrees)
        assert bm.lambda_sq[i] == brute_edge_connectivity(h)[0]
        assert graph_from_mask(n, int(bm.sq_masks[i])) == h
