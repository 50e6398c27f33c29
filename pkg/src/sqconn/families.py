"""Extremal constructions for the edge connectivity of graph squares.

Each generator returns a :class:`FamilyInstance` carrying the graph, a named
block layout over the vertex ids, and the values claimed for the
construction. Claims are checked by :mod:`sqconn.verify`; nothing here
computes connectivity.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from math import isqrt

from .graph import (
    Graph,
    GraphError,
    build_graph,
    complete_graph,
    complete_minus_edge_cover,
    complete_minus_perfect_matching,
    sequential_sum,
)

KINDS = ("Gn", "GkappaEven", "GkappaOdd", "Glambda", "Coro2Sharp")

# CLI spellings
KIND_ALIASES = {
    "g-n": "Gn",
    "g-kappa-even": "GkappaEven",
    "g-kappa-odd": "GkappaOdd",
    "g-lambda": "Glambda",
    "coro2-sharp": "Coro2Sharp",
}

_OPS = {"==": operator.eq, "<=": operator.le, ">=": operator.ge}


@dataclass(frozen=True)
class Claim:
    """A claimed relation ``measured <op> value`` for one quantity."""

    op: str
    value: int
    source: str = "claimed"

    def holds(self, measured: int) -> bool:
        return _OPS[self.op](measured, self.value)

    def to_dict(self) -> dict:
        return {"op": self.op, "value": self.value, "source": self.source}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    parameter: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}; expected one of {KINDS}")

    @property
    def label(self) -> str:
        return f"{self.kind}({self.parameter})"

    @classmethod
    def parse(cls, kind: str, parameter: int) -> FamilySpec:
        return cls(KIND_ALIASES.get(kind, kind), parameter)


@dataclass
class FamilyInstance:
    spec: FamilySpec
    graph: Graph
    blocks: dict[str, range]
    expected: dict[str, Claim] = field(default_factory=dict)

    def metadata(self) -> dict:
        return {
            "family": self.spec.kind,
            "parameter": self.spec.parameter,
            "n": self.graph.n,
            "m": self.graph.m,
            "blocks": {name: [r.start, r.stop] for name, r in self.blocks.items()},
            "expected": {k: c.to_dict() for k, c in self.expected.items()},
        }


def _block_map(blocks: list[range], prefix: str = "V") -> dict[str, range]:
    return {f"{prefix}{i}": r for i, r in enumerate(blocks)}


def gn_part_sizes(n: int) -> tuple[int, ...]:
    r = n % 4
    if r == 0:
        return (n // 4, (n - 4) // 4, 1, 1, (n - 8) // 4, (n + 4) // 4)
    if r == 1:
        return ((n + 3) // 4, (n - 5) // 4, 1, 1, (n - 9) // 4, (n + 3) // 4)
    if r == 2:
        return ((n + 2) // 4, (n - 6) // 4, 1, 1, (n - 6) // 4, (n + 2) // 4)
    return ((n + 1) // 4, (n - 7) // 4, 1, 1, (n - 7) // 4, (n + 5) // 4)


def gen_Gn(n: int) -> FamilyInstance:
    """Six-part sequential sum of order ``n`` whose minimum degree falls one
    short of ``floor((n+2)/4)`` and whose square is not maximally
    edge-connected."""
    if n < 10:
        raise GraphError(f"Gn needs n >= 10, got {n}")
    sizes = gn_part_sizes(n)
    g, blocks = sequential_sum([complete_graph(k) for k in sizes])
    assert g.n == n
    return FamilyInstance(
        spec=FamilySpec("Gn", n),
        graph=g,
        blocks=_block_map(blocks),
        expected={
            "delta": Claim("==", (n + 2) // 4 - 1),
            # delta(G^2) - lambda(G^2)
            "sq_deficit": Claim("==", 1),
        },
    )


def _kappa_construction(kappa: int, middle: Graph, extra: list[tuple[tuple[int, int], tuple[int, int]]]) -> tuple[Graph, dict[str, range]]:
    big = 2 * kappa * kappa
    sizes = [big, kappa, kappa, kappa, kappa, big]
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    blocks = {f"V{i}": range(starts[i], starts[i + 1]) for i in range(6)}

    def vid(block: int, j: int) -> int:
        return starts[block] + j

    edges = []
    for b in (0, 5):
        r = blocks[f"V{b}"]
        edges += [(u, v) for u in r for v in r if u < v]
    for b in (1, 2, 3, 4):
        edges += [(vid(b, u), vid(b, v)) for u, v in middle.edges()]
    edges += [(u, v) for u in blocks["V0"] for v in blocks["V1"]]
    edges += [(u, v) for u in blocks["V4"] for v in blocks["V5"]]
    for j in range(kappa):
        edges += [(vid(1, j), vid(2, j)), (vid(2, j), vid(3, j)), (vid(3, j), vid(4, j))]
    edges += [(vid(b1, j1), vid(b2, j2)) for (b1, j1), (b2, j2) in extra]
    return build_graph(n, edges), blocks


def gen_Gkappa_even(kappa: int) -> FamilyInstance:
    """Two ``K_{2k^2}`` ends around four copies of ``K_k`` minus a perfect
    matching, threaded by ``k`` disjoint paths.

    Blocks ``V0..V5``; vertex ``j`` of middle block ``i`` is
    ``V{i}.start + j`` and is joined to vertex ``j`` of the next middle
    block.
    """
    if kappa < 2 or kappa % 2:
        raise GraphError(f"GkappaEven needs an even kappa >= 2, got {kappa}")
    g, blocks = _kappa_construction(kappa, complete_minus_perfect_matching(kappa), [])
    return FamilyInstance(
        spec=FamilySpec("GkappaEven", kappa),
        graph=g,
        blocks=blocks,
        expected={
            "kappa": Claim("==", kappa),
            "lambda_sq": Claim("==", kappa * (kappa + 1)),
            "delta_sq": Claim(">=", 2 * kappa * kappa),
        },
    )


def gen_Gkappa_odd(kappa: int) -> FamilyInstance:
    """Odd variant: middle blocks are ``K_k`` minus the edge cover
    ``{01, 23, ..., (k-3)(k-2), (k-2)(k-1)}``, plus two diagonal edges from
    vertex ``k-2`` of blocks V2, V3 to vertex ``k-1`` of blocks V1, V4."""
    if kappa < 3 or kappa % 2 == 0:
        raise GraphError(f"GkappaOdd needs an odd kappa >= 3, got {kappa}")
    extra = [((2, kappa - 2), (1, kappa - 1)), ((3, kappa - 2), (4, kappa - 1))]
    g, blocks = _kappa_construction(kappa, complete_minus_edge_cover(kappa), extra)
    return FamilyInstance(
        spec=FamilySpec("GkappaOdd", kappa),
        graph=g,
        blocks=blocks,
        expected={
            "kappa": Claim("==", kappa),
            "lambda_sq": Claim("<=", kappa * (kappa + 1) + 1),
        },
    )


def gen_Glambda(lam: int) -> FamilyInstance:
    """``K_{l^2} + K_{l-t} + K_t + K_t + K_{l-t} + K_{l^2}`` with ``l = t^2``."""
    t = isqrt(lam) if lam >= 0 else 0
    if lam < 4 or t * t != lam:
        raise GraphError(f"Glambda needs a perfect square >= 4, got {lam}")
    sizes = (lam * lam, lam - t, t, t, lam - t, lam * lam)
    g, blocks = sequential_sum([complete_graph(k) for k in sizes])
    return FamilyInstance(
        spec=FamilySpec("Glambda", lam),
        graph=g,
        blocks=_block_map(blocks),
        expected={
            "lambda": Claim("==", lam),
            "delta_sq": Claim("==", lam * lam + lam - 1),
            "lambda_sq": Claim("==", 2 * t ** 3 - lam),
        },
    )


def gen_coro2_sharp(delta: int) -> FamilyInstance:
    """``K_1 + K_d + K_1 + K_d``."""
    if delta < 1:
        raise GraphError(f"Coro2Sharp needs delta >= 1, got {delta}")
    g, blocks = sequential_sum([complete_graph(k) for k in (1, delta, 1, delta)])
    return FamilyInstance(
        spec=FamilySpec("Coro2Sharp", delta),
        graph=g,
        blocks=_block_map(blocks),
        expected={
            "delta": Claim("==", delta),
            "delta_sq": Claim("==", delta + 1),
            "lambda_sq": Claim("==", delta + 1),
        },
    )


GENERATORS = {
    "Gn": gen_Gn,
    "GkappaEven": gen_Gkappa_even,
    "GkappaOdd": gen_Gkappa_odd,
    "Glambda": gen_Glambda,
    "Coro2Sharp": gen_coro2_sharp,
}


def generate(spec: FamilySpec) -> FamilyInstance:
    return GENERATORS[spec.kind](spec.parameter)
