"""Exact edge and vertex connectivity with witnesses, internally disjoint
paths, and the boundary dissection of a cut of a square graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

from .flow import INF, FlowNetwork
from .graph import (
    EdgeSet,
    Graph,
    GraphError,
    VertexSet,
    canonical_edge,
    component_of,
    edges_between,
    is_connected,
    min_degree,
)


@dataclass(frozen=True)
class Cut:
    """A bipartition ``(side1, side2)`` with its crossing edges."""

    side1: VertexSet
    side2: VertexSet
    crossing: EdgeSet

    @property
    def size(self) -> int:
        return len(self.crossing)

    @classmethod
    def from_side(cls, g: Graph, side1) -> Cut:
        side1 = frozenset(side1)
        side2 = frozenset(range(g.n)) - side1
        if not side1 or not side2:
            raise GraphError("both sides of a cut must be nonempty")
        return cls(side1, side2, edges_between(g, side1, side2))

    def validate(self, g: Graph) -> None:
        if self.side1 & self.side2 or (self.side1 | self.side2) != frozenset(range(g.n)):
            raise GraphError("cut sides do not partition the vertex set")
        if not self.side1 or not self.side2:
            raise GraphError("cut side is empty")
        if self.crossing != edges_between(g, self.side1, self.side2):
            raise GraphError("crossing edges do not match the bipartition")


def _component_cut(g: Graph) -> Cut:
    return Cut.from_side(g, component_of(g, 0))


def _unit_network(g: Graph) -> FlowNetwork:
    net = FlowNetwork(g.n)
    for u, v in g.edges():
        net.add_arc(u, v, 1, 1)
    return net


def edge_connectivity(g: Graph, method: str = "flow") -> tuple[int, Cut]:
    """``lambda(g)`` and a minimum cut.

    ``method="flow"`` runs unit-capacity max-flows from a fixed source to
    every other vertex; ``method="stoer-wagner"`` uses maximum-adjacency
    contraction. Disconnected graphs have connectivity 0.
    """
    if g.n < 2:
        raise GraphError(f"edge connectivity needs n >= 2, got n={g.n}")
    if not is_connected(g):
        return 0, _component_cut(g)
    if method == "flow":
        return _edge_connectivity_flow(g)
    if method == "stoer-wagner":
        return _edge_connectivity_stoer_wagner(g)
    raise ValueError(f"unknown method {method!r}")


def _edge_connectivity_flow(g: Graph) -> tuple[int, Cut]:
    degrees = g.degrees
    v_min = degrees.index(min(degrees))
    best = degrees[v_min]
    best_side: frozenset[int] = frozenset([v_min])
    if g.is_complete():
        return best, Cut.from_side(g, best_side)
    net = _unit_network(g)
    s = 0
    for t in range(1, g.n):
        if best == 1:
            # cannot improve on 1 in a connected graph
            break
        value = net.max_flow(s, t, limit=best)
        if value < best:
            best = value
            best_side = frozenset(net.residual_reachable(s))
    return best, Cut.from_side(g, best_side)


def _edge_connectivity_stoer_wagner(g: Graph) -> tuple[int, Cut]:
    n = g.n
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        w[u][v] = w[v][u] = 1
    groups = [[v] for v in range(n)]
    active = list(range(n))
    best = INF
    best_side: list[int] = []
    while len(active) > 1:
        # maximum adjacency ordering
        key = {v: 0 for v in active}
        order = []
        remaining = set(active)
        while remaining:
            nxt = max(remaining, key=lambda v: (key[v], -v))
            remaining.discard(nxt)
            order.append(nxt)
            row = w[nxt]
            for v in remaining:
                key[v] += row[v]
        prev, last = order[-2], order[-1]
        if key[last] < best:
            best = key[last]
            best_side = list(groups[last])
        # merge last into prev
        groups[prev].extend(groups[last])
        for v in active:
            w[prev][v] += w[last][v]
            w[v][prev] = w[prev][v]
        w[prev][prev] = 0
        active.remove(last)
    return best, Cut.from_side(g, best_side)


def is_maximally_edge_connected(g: Graph) -> bool:
    if g.n < 2:
        raise GraphError(f"needs n >= 2, got n={g.n}")
    if not is_connected(g):
        raise GraphError("maximal edge connectivity is defined for connected graphs only")
    lam, _ = edge_connectivity(g)
    delta = min_degree(g)
    assert lam <= delta, "edge connectivity exceeds minimum degree"
    return lam == delta


def _split_network(g: Graph, edge_cap: int = INF) -> FlowNetwork:
    # v_in = 2v, v_out = 2v + 1
    net = FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add_arc(2 * u + 1, 2 * v, edge_cap)
        net.add_arc(2 * v + 1, 2 * u, edge_cap)
    return net


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int = INF,
                              net: FlowNetwork | None = None) -> tuple[int, frozenset[int] | None]:
    """Maximum number of internally disjoint s-t paths for non-adjacent
    ``s, t``; also a minimum s-t separator when the value is below ``limit``."""
    if s == t or g.has_edge(s, t):
        raise GraphError("local vertex connectivity needs distinct non-adjacent vertices")
    if net is None:
        net = _split_network(g)
    value = net.max_flow(2 * s + 1, 2 * t, limit=limit)
    if value >= limit:
        return value, None
    reach = net.residual_reachable(2 * s + 1)
    sep = frozenset(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach)
    return value, sep


def vertex_connectivity(g: Graph) -> tuple[int, frozenset[int] | None]:
    """``kappa(g)`` and a minimum separator (None for complete graphs, whose
    connectivity is taken to be ``n - 1``).

    Uses the fact that some minimum separator misses a minimum-degree vertex
    ``v``: it either separates ``v`` from a non-neighbour, or separates two
    non-adjacent neighbours of ``v``.
    """
    if g.n < 2:
        raise GraphError(f"vertex connectivity needs n >= 2, got n={g.n}")
    if g.is_complete():
        return g.n - 1, None
    if not is_connected(g):
        return 0, frozenset()
    degrees = g.degrees
    v = degrees.index(min(degrees))
    best = degrees[v]
    best_sep = g.adj[v]
    net = _split_network(g)
    candidates = [(v, u) for u in range(g.n) if u != v and u not in g.adj[v]]
    nbrs = sorted(g.adj[v])
    candidates += [(x, y) for x, y in combinations(nbrs, 2) if y not in g.adj[x]]
    for s, t in candidates:
        if best == 1:
            break
        value, sep = local_vertex_connectivity(g, s, t, limit=best, net=net)
        if value < best:
            best, best_sep = value, sep
    return best, frozenset(best_sep)


def separates(g: Graph, removed) -> bool:
    """True when deleting ``removed`` leaves a disconnected graph."""
    removed = frozenset(removed)
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) < 2:
        return False
    return len(component_of(g, rest[0], removed)) < len(rest)


def disconnects(g: Graph, crossing) -> bool:
    """True when deleting the edge set ``crossing`` leaves a disconnected graph."""
    drop = {canonical_edge(u, v) for u, v in crossing}
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen and canonical_edge(u, v) not in drop:
                seen.add(u)
                stack.append(u)
    return len(seen) < g.n


def _chordless(g: Graph, path: list[int]) -> list[int]:
    # jump to the furthest later vertex adjacent to the current one; the
    # direct s-t edge is only taken by a path that already is that edge
    if len(path) <= 2:
        return path
    out = [path[0]]
    i = 0
    last = len(path) - 1
    while i < last:
        v = path[i]
        j = last
        while j > i + 1 and (path[j] not in g.adj[v] or (i == 0 and j == last)):
            j -= 1
        out.append(path[j])
        i = j
    return out


def disjoint_paths(g: Graph, s: int, t: int, count: int) -> list[list[int]] | None:
    """``count`` internally vertex-disjoint s-t paths, each chordless apart
    from a possible s-t edge, or None when fewer exist."""
    if s == t:
        raise GraphError("disjoint paths need distinct endpoints")
    if count < 1:
        raise GraphError(f"count must be positive, got {count}")
    net = _split_network(g, edge_cap=1)
    if net.max_flow(2 * s + 1, 2 * t, limit=count) < count:
        return None
    remaining: dict[int, list[int]] = {}
    for node in range(net.n):
        for e in net.out[node]:
            f = net.flow_on(e)
            if f > 0:
                remaining.setdefault(node, []).extend([net.head[e]] * f)
    paths = []
    for _ in range(count):
        walk = [s]
        node = 2 * s + 1
        while node != 2 * t:
            node = remaining[node].pop()
            if node % 2 == 0:
                v = node // 2
                if v in walk:
                    del walk[walk.index(v) + 1:]
                else:
                    walk.append(v)
                if v != t:
                    node = remaining[node].pop()
        paths.append(_chordless(g, walk))
    return paths


def validate_paths(g: Graph, s: int, t: int, paths: list[list[int]]) -> bool:
    """Independent check: each path walks edges of ``g`` from s to t without
    repeating vertices, and no internal vertex is shared between paths."""
    used: set[int] = set()
    for p in paths:
        if p[0] != s or p[-1] != t or len(set(p)) != len(p):
            return False
        if any(b not in g.adj[a] for a, b in zip(p, p[1:])):
            return False
        inner = set(p[1:-1])
        if inner & used:
            return False
        used |= inner
    return True


def _inc_above(inc: int, lam: int) -> bool:
    # inc > lam - sqrt(lam)  <=>  lam - inc < sqrt(lam)
    d = lam - inc
    return d < 0 or d * d < lam


def _inc_below(inc: int, lam: int) -> bool:
    # inc < sqrt(lam)
    return inc * inc < lam


@dataclass
class CutAnalysis:
    """Boundary dissection of a cut ``S`` of ``H = G^2`` relative to ``G``.

    ``a_boundary``/``b_boundary`` are the endpoints of ``S`` on each side,
    ``s_prime`` the cut edges that are also edges of ``G``, and
    ``a_prime``/``b_prime`` their endpoints. ``inc[v]`` counts the
    ``s_prime`` edges at ``v``. The plus/minus sets split the primed
    boundaries by the thresholds ``lambda0 - sqrt(lambda0)`` and
    ``sqrt(lambda0)``.
    """

    cut: Cut
    lambda0: int
    a_boundary: VertexSet
    b_boundary: VertexSet
    s_prime: EdgeSet
    a_prime: VertexSet
    b_prime: VertexSet
    interior1: VertexSet
    interior2: VertexSet
    inc: dict[int, int]
    a_plus: VertexSet
    a_minus: VertexSet
    b_plus: VertexSet
    b_minus: VertexSet
    middle: VertexSet
    h_min_degree: int
    notes: list[str] = field(default_factory=list)

    @property
    def dichotomy_holds(self) -> bool:
        """Every primed boundary vertex is either heavy or light."""
        return not self.middle

    @property
    def interior_required(self) -> bool:
        return self.cut.size < self.h_min_degree

    @property
    def interior_present(self) -> bool:
        return bool(self.interior1) and bool(self.interior2)

    @property
    def interior_condition_ok(self) -> bool:
        """Small cuts (below the minimum degree) leave interior vertices on
        both sides."""
        return not self.interior_required or self.interior_present


def analyze_cut(g: Graph, h: Graph, cut: Cut, lambda0: int) -> CutAnalysis:
    if g.n != h.n:
        raise GraphError(f"vertex sets differ: {g.n} vs {h.n}")
    if lambda0 < 1:
        raise GraphError(f"lambda0 must be positive, got {lambda0}")
    cut.validate(h)
    side1 = cut.side1
    a_boundary = frozenset(u if u in side1 else v for u, v in cut.crossing)
    b_boundary = frozenset(v if u in side1 else u for u, v in cut.crossing)
    s_prime = frozenset(e for e in cut.crossing if g.has_edge(*e))
    inc: dict[int, int] = {}
    for u, v in s_prime:
        inc[u] = inc.get(u, 0) + 1
        inc[v] = inc.get(v, 0) + 1
    a_prime = frozenset(v for v in inc if v in side1)
    b_prime = frozenset(v for v in inc if v not in side1)

    def split(part):
        plus = frozenset(v for v in part if _inc_above(inc[v], lambda0))
        minus = frozenset(v for v in part if _inc_below(inc[v], lambda0))
        return plus, minus

    a_plus, a_minus = split(a_prime)
    b_plus, b_minus = split(b_prime)
    middle = (a_prime | b_prime) - (a_plus | a_minus | b_plus | b_minus)
    analysis = CutAnalysis(
        cut=cut,
        lambda0=lambda0,
        a_boundary=a_boundary,
        b_boundary=b_boundary,
        s_prime=s_prime,
        a_prime=a_prime,
        b_prime=b_prime,
        interior1=side1 - a_boundary,
        interior2=cut.side2 - b_boundary,
        inc=inc,
        a_plus=a_plus,
        a_minus=a_minus,
        b_plus=b_plus,
        b_minus=b_minus,
        middle=middle,
        h_min_degree=min_degree(h),
    )
    if not analysis.interior_condition_ok:
        analysis.notes.append("cut below minimum degree without interior vertices on both sides")
    return analysis


def is_perfect_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x
