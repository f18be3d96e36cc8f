"""Dinic's maximum-flow algorithm with exact integer capacities and min-cut extraction."""

from __future__ import annotations

from collections import deque


class FlowGraph:
    """Adjacency-list flow network.  Arcs are mutable; build one per computation."""

    def __init__(self, num_nodes: int) -> None:
        self.num_nodes = num_nodes
        # arc = [head, residual capacity, index of reverse arc in adj[head]]
        self.adj: list[list[list[int]]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        if cap < 0:
            raise ValueError("capacity must be nonnegative")
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for head, cap, _ in self.adj[u]:
                if cap > 0 and level[head] < 0:
                    level[head] = level[u] + 1
                    queue.append(head)
        return level if level[t] >= 0 else None

    def _augment(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            arc = self.adj[u][it[u]]
            head, cap, rev = arc
            if cap > 0 and level[head] == level[u] + 1:
                pushed = self._augment(head, t, min(limit, cap), level, it)
                if pushed > 0:
                    arc[1] -= pushed
                    self.adj[head][rev][1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        """Exact maximum s-t flow value; leaves the residual network in place."""
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.num_nodes
            while True:
                pushed = self._augment(s, t, 1 << 62, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def source_side(self, s: int) -> frozenset[int]:
        """Nodes reachable from s in the residual network: the s-side of a min cut."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for head, cap, _ in self.adj[u]:
                if cap > 0 and head not in seen:
                    seen.add(head)
                    queue.append(head)
        return frozenset(seen)
