"""Exact maximum-flow / minimum-cut over integer capacities.

Dinic's algorithm on an adjacency-array representation.  Capacities are
arbitrary-precision Python integers, so "uncuttable" arcs can simply carry a
sentinel value larger than the total finite capacity with no overflow risk,
and every result is exact.  Arc iteration order is the insertion order, which
makes flows, cuts, and the residual source side deterministic.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """A capacitated digraph supporting max-flow queries.

    Every :meth:`add_edge` call creates the edge and its residual twin at
    indices ``e`` and ``e ^ 1``.
    """

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        e = len(self.to)
        self.to.extend((v, u))
        self.cap.extend((capacity, 0))
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def send_along(self, edges: list[int], amount: int) -> None:
        """Push a known-feasible amount along a path of edge ids (warm start)."""
        for e in edges:
            if self.cap[e] < amount:
                raise ValueError("warm-start amount exceeds residual capacity")
            self.cap[e] -= amount
            self.cap[e ^ 1] += amount

    def _bfs_levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in self.adj[v]:
                w = self.to[e]
                if self.cap[e] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue.append(w)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        """Exact maximum s-t flow (equivalently, minimum cut weight)."""
        if s == t:
            raise ValueError("source and sink must differ")
        to, cap, adj = self.to, self.cap, self.adj
        total = 0
        while True:
            level = self._bfs_levels(s, t)
            if level is None:
                return total
            ptr = [0] * self.n
            path: list[int] = []
            v = s
            while True:
                if v == t:
                    aug = min(cap[e] for e in path)
                    for e in path:
                        cap[e] -= aug
                        cap[e ^ 1] += aug
                    total += aug
                    # retreat to just before the first saturated edge
                    for idx, e in enumerate(path):
                        if cap[e] == 0:
                            del path[idx:]
                            break
                    v = to[path[-1]] if path else s
                    continue
                advanced = False
                while ptr[v] < len(adj[v]):
                    e = adj[v][ptr[v]]
                    if cap[e] > 0 and level[to[e]] == level[v] + 1:
                        path.append(e)
                        v = to[e]
                        advanced = True
                        break
                    ptr[v] += 1
                if advanced:
                    continue
                if v == s:
                    break  # blocking flow for this phase is complete
                level[v] = -1  # dead end in this phase
                e = path.pop()
                v = to[e ^ 1]
                ptr[v] += 1

    def residual_reachable(self, s: int) -> frozenset[int]:
        """Vertices reachable from s along positive residual capacity."""
        seen = {s}
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for e in self.adj[v]:
                w = self.to[e]
                if self.cap[e] > 0 and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)
