"""Brute-force ground truth for small graphs.

Everything here works by exhaustive enumeration over vertex subsets or edge
masks and shares no code with the flow-based algorithms.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .graph import Graph, GraphError, edges_between

EDGE_CAP = 20
VERTEX_CAP = 16
ENUM_CAP = 8


def _masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _reach(adj: list[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def brute_edge_connectivity(g: Graph, cap: int = EDGE_CAP) -> tuple[int, frozenset[int]]:
    """Minimum of ``|E(X, V - X)|`` over all proper X containing vertex 0.

    Returns the value and an optimal ``X``.
    """
    if g.n < 2:
        raise GraphError(f"needs n >= 2, got n={g.n}")
    if g.n > cap:
        raise GraphError(f"n={g.n} exceeds the brute-force cap {cap}")
    n = g.n
    adj = _masks(g)
    full = (1 << n) - 1
    best = None
    best_x = 0
    # X = {0} | (rest << 1) with rest ranging over proper subsets of 1..n-1
    for rest in range((1 << (n - 1)) - 1):
        x = 1 | (rest << 1)
        outside = full & ~x
        size = 0
        bits = x
        while bits:
            low = bits & -bits
            size += (adj[low.bit_length() - 1] & outside).bit_count()
            bits ^= low
        if best is None or size < best:
            best, best_x = size, x
    return best, frozenset(v for v in range(n) if best_x >> v & 1)


def brute_vertex_connectivity(g: Graph, cap: int = VERTEX_CAP) -> tuple[int, frozenset[int] | None]:
    """Smallest vertex set whose removal disconnects ``g``; ``n - 1`` and
    None for complete graphs."""
    if g.n < 2:
        raise GraphError(f"needs n >= 2, got n={g.n}")
    if g.n > cap:
        raise GraphError(f"n={g.n} exceeds the brute-force cap {cap}")
    n = g.n
    adj = _masks(g)
    full = (1 << n) - 1
    for k in range(0, n - 1):
        for removed in combinations(range(n), k):
            rmask = sum(1 << v for v in removed)
            allowed = full & ~rmask
            start = (allowed & -allowed).bit_length() - 1
            if _reach(adj, start, allowed) != allowed:
                return k, frozenset(removed)
    return n - 1, None


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs or pair_list(n)
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    rows = tuple(frozenset(u for u in range(n) if a >> u & 1) for a in adj)
    return Graph._trusted(n, rows)


def _mask_connected(n: int, mask: int, pairs) -> bool:
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    full = (1 << n) - 1
    return _reach(adj, 0, full) == full


def enumerate_connected_graphs(n: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, once each, in edge
    mask order."""
    if n < 1:
        raise GraphError(f"needs n >= 1, got {n}")
    if n > cap:
        raise GraphError(f"n={n} exceeds the enumeration cap {cap}")
    pairs = pair_list(n)
    for mask in range(1 << len(pairs)):
        if _mask_connected(n, mask, pairs):
            yield graph_from_mask(n, mask, pairs)


def count_connected_labeled(n: int) -> int:
    """Connected labeled graphs on n vertices by inclusion-exclusion over the
    component containing vertex 1."""
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** comb(k, 2)
        for j in range(1, k):
            total -= comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2)
        c.append(total)
    return c[n]


# Batch evaluation over every edge mask at once, vectorized with numpy.
# Each graph is a uint32 mask over the C(n,2) vertex pairs.


@dataclass
class BatchMetrics:
    n: int
    masks: np.ndarray
    sq_masks: np.ndarray
    m: np.ndarray
    delta: np.ndarray
    lam: np.ndarray
    kappa: np.ndarray
    delta_sq: np.ndarray
    lambda_sq: np.ndarray
    complete: np.ndarray


def _vertex_rows(n: int, masks: np.ndarray, pairs) -> list[np.ndarray]:
    rows = [np.zeros(masks.shape, dtype=np.uint32) for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        bit = (masks >> np.uint32(i)) & np.uint32(1)
        rows[u] |= bit << np.uint32(v)
        rows[v] |= bit << np.uint32(u)
    return rows


def _batch_connected(n: int, rows: list[np.ndarray], allowed: int) -> np.ndarray:
    verts = [v for v in range(n) if allowed >> v & 1]
    start = verts[0]
    seen = np.full(rows[0].shape, 1 << start, dtype=np.uint32)
    a = np.uint32(allowed)
    for _ in range(len(verts) - 1):
        grown = seen.copy()
        for v in verts:
            hit = ((seen >> np.uint32(v)) & np.uint32(1)).astype(bool)
            grown |= np.where(hit, rows[v] & a, np.uint32(0))
        seen = grown
    return seen == a


def _batch_degrees(rows: list[np.ndarray]) -> np.ndarray:
    return np.stack([np.bitwise_count(r) for r in rows]).astype(np.int64)


def _batch_edge_connectivity(n: int, masks: np.ndarray, pairs) -> np.ndarray:
    best = np.full(masks.shape, n, dtype=np.int64)
    for rest in range((1 << (n - 1)) - 1):
        x = 1 | (rest << 1)
        crossing = 0
        for i, (u, v) in enumerate(pairs):
            if (x >> u & 1) != (x >> v & 1):
                crossing |= 1 << i
        np.minimum(best, np.bitwise_count(masks & np.uint32(crossing)).astype(np.int64), out=best)
    return best


def _batch_vertex_connectivity(n: int, rows: list[np.ndarray], complete: np.ndarray) -> np.ndarray:
    kappa = np.where(complete, n - 1, -1).astype(np.int64)
    full = (1 << n) - 1
    for k in range(0, n - 1):
        open_ = kappa < 0
        if not open_.any():
            break
        for removed in combinations(range(n), k):
            allowed = full & ~sum(1 << v for v in removed)
            disc = ~_batch_connected(n, rows, allowed)
            kappa[open_ & disc & (kappa < 0)] = k
    return kappa


def batch_metrics(n: int, connected_only: bool = True) -> BatchMetrics:
    """delta, lambda, kappa and the same for the square, for every labeled
    graph on ``n`` vertices (2 <= n <= 8)."""
    if not 2 <= n <= ENUM_CAP:
        raise GraphError(f"batch evaluation supports 2 <= n <= {ENUM_CAP}, got {n}")
    pairs = pair_list(n)
    npairs = len(pairs)
    masks = np.arange(1 << npairs, dtype=np.uint32)
    rows = _vertex_rows(n, masks, pairs)
    if connected_only:
        keep = _batch_connected(n, rows, (1 << n) - 1)
        masks = masks[keep]
        rows = [r[keep] for r in rows]
    # square: u~v if adjacent or sharing a neighbour
    sq = masks.copy()
    for i, (u, v) in enumerate(pairs):
        common = np.bitwise_count(rows[u] & rows[v]) > 0
        sq |= np.where(common, np.uint32(1 << i), np.uint32(0))
    sq_rows = _vertex_rows(n, sq, pairs)
    full_mask = (1 << npairs) - 1
    complete = masks == np.uint32(full_mask)
    return BatchMetrics(
        n=n,
        masks=masks,
        sq_masks=sq,
        m=np.bitwise_count(masks).astype(np.int64),
        delta=_batch_degrees(rows).min(axis=0),
        lam=_batch_edge_connectivity(n, masks, pairs),
        kappa=_batch_vertex_connectivity(n, rows, complete),
        delta_sq=_batch_degrees(sq_rows).min(axis=0),
        lambda_sq=_batch_edge_connectivity(n, sq, pairs),
        complete=complete,
    )


def cut_edges_brute(g: Graph, side) -> int:
    side = frozenset(side)
    return len(edges_between(g, side, frozenset(range(g.n)) - side))
