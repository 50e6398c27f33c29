"""Graph powers and breadth-first distances."""

from __future__ import annotations

from .graph import Graph, GraphError


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    """Distances from ``source`` to every vertex within ``limit`` hops
    (all reachable vertices when ``limit`` is None)."""
    dist = {source: 0}
    frontier = [source]
    d = 0
    adj = g.adj
    while frontier and (limit is None or d < limit):
        d += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Length of a shortest u-v path, or None when v is unreachable."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range 0..{g.n - 1}")
    return bfs_distances(g, u).get(v)


def all_pairs_distances(g: Graph) -> list[dict[int, int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance; None for disconnected graphs."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if len(dist) < g.n:
            return None
        best = max(best, max(dist.values()))
    return best


def graph_power(g: Graph, k: int) -> Graph:
    """The k-th power: same vertices, ``u ~ v`` iff ``1 <= d(u, v) <= k``.

    Disconnected graphs are handled componentwise.
    """
    if k < 1:
        raise GraphError(f"graph power needs k >= 1, got {k}")
    if g.n == 0:
        raise GraphError("power of the empty graph")
    if k == 1:
        return g
    if k == 2:
        return square(g)
    adj = []
    for v in range(g.n):
        reach = bfs_distances(g, v, limit=k)
        del reach[v]
        adj.append(frozenset(reach))
    return Graph._trusted(g.n, tuple(adj))


def square(g: Graph) -> Graph:
    """``graph_power(g, 2)``; the union of closed neighbourhoods of neighbours."""
    adj = g.adj
    out = []
    for v in range(g.n):
        row = set(adj[v])
        for u in adj[v]:
            row |= adj[u]
        row.discard(v)
        out.append(frozenset(row))
    return Graph._trusted(g.n, tuple(out))
