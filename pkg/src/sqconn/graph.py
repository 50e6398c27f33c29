"""Immutable simple graphs on dense integer vertex ids, plus the basic
constructions used throughout the package (complete graphs, sequential sums,
induced subgraphs, edge sets between vertex sets).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from functools import cached_property

VertexSet = frozenset  # frozenset[int]
EdgeSet = frozenset  # frozenset[tuple[int, int]], canonical (min, max) pairs


class GraphError(ValueError):
    """Raised for malformed graph input or violated preconditions."""


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    Instances are immutable; every constructor validates symmetry and the
    absence of self-loops.
    """

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        frozen = tuple(frozenset(row) for row in adj)
        for v, row in enumerate(frozen):
            if v in row:
                raise GraphError(f"self-loop at vertex {v}")
            for u in row:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor {u} of vertex {v} out of range 0..{n - 1}")
                if v not in frozen[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = frozen

    @classmethod
    def _trusted(cls, n: int, adj: tuple[frozenset[int], ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted canonical pairs."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges())

    def vertices(self) -> range:
        return range(self.n)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs are merged."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph._trusted(n, tuple(frozenset(row) for row in adj))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees)


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"complete graph needs k >= 1, got {k}")
    full = frozenset(range(k))
    return Graph._trusted(k, tuple(full - {v} for v in range(k)))


def _complete_minus(k: int, removed: Iterable[tuple[int, int]]) -> Graph:
    adj = [set(range(k)) - {v} for v in range(k)]
    for u, v in removed:
        adj[u].discard(v)
        adj[v].discard(u)
    return Graph._trusted(k, tuple(frozenset(row) for row in adj))


def complete_minus_perfect_matching(k: int) -> Graph:
    """``K_k`` without the matching ``(0,1), (2,3), ..., (k-2,k-1)``."""
    if k < 2 or k % 2:
        raise GraphError(f"perfect matching needs an even k >= 2, got {k}")
    return _complete_minus(k, [(i, i + 1) for i in range(0, k, 2)])


def complete_minus_edge_cover(k: int) -> Graph:
    """``K_k`` without the edge cover ``(0,1), (2,3), ..., (k-3,k-2), (k-2,k-1)``.

    Vertex ``k-2`` loses two edges, every other vertex loses one.
    """
    if k < 3 or k % 2 == 0:
        raise GraphError(f"odd edge cover needs an odd k >= 3, got {k}")
    removed = [(i, i + 1) for i in range(0, k - 2, 2)] + [(k - 2, k - 1)]
    return _complete_minus(k, removed)


def sequential_sum(parts: Sequence[Graph]) -> tuple[Graph, list[range]]:
    """Disjoint union of ``parts`` with every vertex of part ``i`` joined to
    every vertex of part ``i+1``.

    Vertex ids are assigned block-contiguously in list order; the returned
    ranges give the id block of each part.
    """
    if not parts:
        raise GraphError("sequential sum of an empty list")
    blocks: list[range] = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p.n))
        start += p.n
    adj: list[set[int]] = [set() for _ in range(start)]
    for p, block in zip(parts, blocks):
        off = block.start
        for v in range(p.n):
            adj[off + v].update(off + u for u in p.adj[v])
    for left, right in zip(blocks, blocks[1:]):
        rset = set(right)
        lset = set(left)
        for v in left:
            adj[v] |= rset
        for v in right:
            adj[v] |= lset
    return Graph._trusted(start, tuple(frozenset(row) for row in adj)), blocks


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> EdgeSet:
    """The set of edges of ``g`` with one end in ``a`` and the other in ``b``."""
    a = frozenset(a)
    b = frozenset(b)
    if a & b:
        raise GraphError(f"vertex sets overlap in {sorted(a & b)}")
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return frozenset(canonical_edge(u, v) for u in small for v in g.adj[u] & large)


def induced_subgraph(g: Graph, a: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``a``, relabelled to ``0..|a|-1`` in increasing id
    order, together with the old-to-new id map."""
    members = sorted(set(a))
    if not members:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(members)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in members)
    return Graph._trusted(len(members), adj), index


def component_of(g: Graph, source: int, removed: frozenset[int] = frozenset()) -> set[int]:
    """Vertices reachable from ``source`` while avoiding ``removed``."""
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen and u not in removed:
                seen.add(u)
                queue.append(u)
    return seen


def components(g: Graph) -> list[list[int]]:
    out = []
    seen: set[int] = set()
    for v in range(g.n):
        if v not in seen:
            comp = component_of(g, v)
            seen |= comp
            out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return len(component_of(g, 0)) == g.n


def petersen_graph() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes ``i -- i+5``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
