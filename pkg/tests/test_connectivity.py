import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from sqconn.connectivity import (
    Cut,
    analyze_cut,
    disconnects,
    disjoint_paths,
    edge_connectivity,
    is_maximally_edge_connected,
    local_vertex_connectivity,
    separates,
    validate_paths,
    vertex_connectivity,
)
from sqconn.families import gen_Glambda, gen_Gn, gen_Gkappa_even
from sqconn.flow import FlowNetwork
from sqconn.graph import GraphError, build_graph, complete_graph, min_degree, star_graph
from sqconn.oracle import brute_edge_connectivity, brute_vertex_connectivity
from sqconn.power import square


def test_flow_network_textbook():
    net = FlowNetwork(6)
    for u, v, c in [(0, 1, 3), (0, 2, 3), (1, 2, 2), (1, 3, 3), (2, 4, 2), (3, 4, 4), (3, 5, 2), (4, 5, 3)]:
        net.add_arc(u, v, c)
    assert net.max_flow(0, 5) == 5
    assert net.max_flow(0, 5, limit=3) == 3
    net.max_flow(0, 5)
    side = net.residual_reachable(0)
    cut = sum(net.base_cap[e] for u in side for e in net.out[u] if net.head[e] not in side)
    assert cut == 5


@pytest.mark.parametrize("method", ["flow", "stoer-wagner"])
def test_edge_connectivity_small(method, c6, petersen):
    assert edge_connectivity(complete_graph(5), method)[0] == 4
    assert edge_connectivity(c6, method)[0] == 2
    assert edge_connectivity(petersen, method)[0] == brute_edge_connectivity(petersen)[0] == 3


@pytest.mark.parametrize("method", ["flow", "stoer-wagner"])
def test_edge_connectivity_glambda4_square(method):
    h = square(gen_Glambda(4).graph)
    value, cut = edge_connectivity(h, method)
    assert value == 12
    assert cut.size == 12 and disconnects(h, cut.crossing)


def test_edge_connectivity_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    value, cut = edge_connectivity(g)
    assert value == 0
    assert cut.side1 == {0, 1} and cut.size == 0


def test_edge_connectivity_rejects_tiny():
    with pytest.raises(GraphError):
        edge_connectivity(complete_graph(1))


def test_vertex_connectivity_small(c6, petersen):
    assert vertex_connectivity(complete_graph(6)) == (5, None)
    assert vertex_connectivity(c6)[0] == 2
    value, sep = vertex_connectivity(petersen)
    assert value == brute_vertex_connectivity(petersen)[0] == 3
    assert separates(petersen, sep)
    assert vertex_connectivity(star_graph(3)) == (1, frozenset({0}))


def test_vertex_connectivity_gkappa4():
    g = gen_Gkappa_even(4).graph
    value, sep = vertex_connectivity(g)
    assert value == 4 and separates(g, sep)


def test_local_vertex_connectivity_requires_nonadjacent(p4):
    with pytest.raises(GraphError):
        local_vertex_connectivity(p4, 0, 1)
    assert local_vertex_connectivity(p4, 0, 3)[0] == 1


def test_is_maximally_edge_connected(petersen):
    assert is_maximally_edge_connected(complete_graph(4))
    assert is_maximally_edge_connected(square(petersen))
    assert not is_maximally_edge_connected(square(gen_Gn(12).graph))
    with pytest.raises(GraphError):
        is_maximally_edge_connected(build_graph(3, [(0, 1)]))


def test_disjoint_paths_k4():
    paths = disjoint_paths(complete_graph(4), 0, 1, 3)
    assert sorted(map(len, paths)) == [2, 3, 3]
    assert validate_paths(complete_graph(4), 0, 1, paths)


def test_disjoint_paths_c6(c6):
    paths = disjoint_paths(c6, 0, 3, 2)
    assert sorted(map(tuple, paths)) == [(0, 1, 2, 3), (0, 5, 4, 3)]


def test_disjoint_paths_petersen(petersen):
    for t in range(1, 10):
        paths = disjoint_paths(petersen, 0, t, 3)
        assert paths is not None and validate_paths(petersen, 0, t, paths)
        assert disjoint_paths(petersen, 0, t, 4) is None


def test_disjoint_paths_rejects_same_endpoint(p4):
    with pytest.raises(GraphError):
        disjoint_paths(p4, 1, 1, 1)


def _chordless(g, p, s, t):
    for i in range(len(p)):
        for j in range(i + 2, len(p)):
            if p[j] in g.adj[p[i]] and {p[i], p[j]} != {s, t}:
                return False
    return True


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_disjoint_paths_menger(g):
    s, t = 0, g.n - 1
    k = nx.node_connectivity(to_nx(g), s, t) if not g.has_edge(s, t) else None
    if k is None:
        return
    paths = disjoint_paths(g, s, t, k)
    assert paths is not None and validate_paths(g, s, t, paths)
    assert all(_chordless(g, p, s, t) for p in paths)
    assert disjoint_paths(g, s, t, k + 1) is None


@settings(max_examples=200)
@given(graphs(min_n=2, max_n=9))
def test_edge_connectivity_matches_oracle(g):
    expected, _ = brute_edge_connectivity(g)
    for method in ("flow", "stoer-wagner"):
        value, cut = edge_connectivity(g, method)
        assert value == expected
        cut.validate(g)
        assert cut.size == value
        if value:
            assert disconnects(g, cut.crossing)


@settings(max_examples=200)
@given(graphs(min_n=2, max_n=9))
def test_vertex_connectivity_matches_oracle(g):
    expected, _ = brute_vertex_connectivity(g)
    value, sep = vertex_connectivity(g)
    assert value == expected
    if sep is not None:
        assert len(sep) == value
        assert value == 0 or separates(g, sep)
    if nx.is_connected(to_nx(g)):
        assert value == nx.node_connectivity(to_nx(g))


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=10, connected=True))
def test_whitney_chain(g):
    kappa = vertex_connectivity(g)[0]
    lam = edge_connectivity(g)[0]
    assert kappa <= lam <= min_degree(g)
    if 2 * min_degree(g) >= g.n - 1:
        assert lam == min_degree(g)


def test_analyze_cut_path(p4):
    h = square(p4)
    cut = Cut.from_side(h, {0, 1})
    assert cut.crossing == {(0, 2), (1, 2), (1, 3)}
    a = analyze_cut(p4, h, cut, 1)
    assert a.s_prime == {(1, 2)}
    assert a.a_prime == {1} and a.b_prime == {2}
    assert a.inc == {1: 1, 2: 1}
    assert a.a_boundary == {0, 1} and a.b_boundary == {2, 3}
    assert not a.interior1 and not a.interior2


def test_analyze_cut_complete():
    g = complete_graph(5)
    value, cut = edge_connectivity(g)
    a = analyze_cut(g, g, cut, value)
    assert cut.size == min_degree(g)
    assert not a.interior_required and a.interior_condition_ok
    assert not a.notes


def test_analyze_cut_glambda4():
    g = gen_Glambda(4).graph
    h = square(g)
    value, cut = edge_connectivity(h)
    a = analyze_cut(g, h, cut, 4)
    assert value == 12 < min_degree(h) == 19
    assert a.interior_required and a.interior_present


def test_analyze_cut_mismatch(p4):
    with pytest.raises(GraphError):
        analyze_cut(p4, complete_graph(5), Cut.from_side(complete_graph(5), {0}), 1)


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_analyze_cut_consistency(g):
    h = square(g)
    _, cut = edge_connectivity(h)
    lam0 = edge_connectivity(g)[0]
    a = analyze_cut(g, h, cut, lam0)
    assert a.a_prime <= a.a_boundary and a.b_prime <= a.b_boundary
    assert a.interior1 == cut.side1 - a.a_boundary
    assert a.interior2 == cut.side2 - a.b_boundary
    # second scan for the boundaries
    assert a.a_boundary == {v for v in cut.side1 if h.adj[v] & cut.side2}
    assert sum(a.inc.values()) == 2 * len(a.s_prime)
    assert set(a.inc) == a.a_prime | a.b_prime
    assert a.interior_condition_ok
    for v in a.a_plus:
        assert a.inc[v] > lam0 - lam0 ** 0.5 - 1e-12
    for v in a.a_minus:
        assert a.inc[v] < lam0 ** 0.5 + 1e-12
