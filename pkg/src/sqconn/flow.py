"""Dinic's maximum-flow algorithm on small integer-capacity networks.

Arcs are stored in paired slots: arc ``e`` and its reverse ``e ^ 1``.
"""

from __future__ import annotations

from collections import deque

INF = 1 << 30


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.head: list[int] = []
        self.base_cap: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        """Add ``u -> v`` with capacity ``cap`` (and ``rev_cap`` backwards);
        returns the forward arc id."""
        e = len(self.head)
        self.head += (v, u)
        self.base_cap += (cap, rev_cap)
        self.out[u].append(e)
        self.out[v].append(e + 1)
        return e

    def reset(self) -> None:
        self.cap = list(self.base_cap)

    def flow_on(self, e: int) -> int:
        return self.base_cap[e] - self.cap[e]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        head, cap, out = self.head, self.cap, self.out
        while queue:
            v = queue.popleft()
            for e in out[v]:
                if cap[e] > 0:
                    u = head[e]
                    if level[u] < 0:
                        level[u] = level[v] + 1
                        if u == t:
                            return level
                        queue.append(u)
        return None

    def _blocking_flow(self, s: int, t: int, level: list[int], budget: int) -> int:
        head, cap, out = self.head, self.cap, self.out
        it = [0] * self.n
        pushed = 0
        while pushed < budget:
            # one augmenting path by iterative DFS over the level graph
            path: list[int] = []
            v = s
            while v != t:
                arcs = out[v]
                i = it[v]
                while i < len(arcs):
                    e = arcs[i]
                    u = head[e]
                    if cap[e] > 0 and level[u] == level[v] + 1:
                        break
                    i += 1
                it[v] = i
                if i == len(arcs):
                    if v == s:
                        return pushed
                    level[v] = -1  # dead end
                    e = path.pop()
                    v = head[e ^ 1]
                    it[v] += 1
                    continue
                path.append(arcs[i])
                v = head[arcs[i]]
            amount = min(min(cap[e] for e in path), budget - pushed)
            for e in path:
                cap[e] -= amount
                cap[e ^ 1] += amount
            pushed += amount
        return pushed

    def max_flow(self, s: int, t: int, limit: int = INF) -> int:
        """Maximum s-t flow value, stopping early once ``limit`` is reached.

        Residual capacities are reset first and left in place afterwards so
        that :meth:`residual_reachable` can extract a minimum cut.
        """
        self.reset()
        flow = 0
        while flow < limit:
            level = self._levels(s, t)
            if level is None:
                break
            flow += self._blocking_flow(s, t, level, limit - flow)
        return flow

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        head, cap, out = self.head, self.cap, self.out
        while stack:
            v = stack.pop()
            for e in out[v]:
                if cap[e] > 0 and head[e] not in seen:
                    seen.add(head[e])
                    stack.append(head[e])
        return seen
