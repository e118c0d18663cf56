"""Immutable simple undirected graphs and diameter-threshold failure queries.

A graph is *operational* for a threshold ``k`` when some component has
diameter at least ``k``; it is in a *failure state* when every component has
diameter strictly below ``k``.  Everything downstream (closed forms, witness
constructions, the exhaustive searches) is phrased in terms of the queries
defined here.

Graphs never mutate: deletion operations return new graphs and all queries
are pure, so instances can be shared freely.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

Edge = tuple[int, int]

UNREACHABLE: float = math.inf
"""Distance between vertices in different components, and the diameter of a
disconnected or empty graph.  Finite distances are exact ints, so ``d < k``,
``d == k`` and ``d >= k`` are total for every value a query can return."""


class GraphError(ValueError):
    """Malformed construction input or an out-of-range vertex or edge."""


def normalize_edge(u: int, v: int) -> Edge:
    """Order the endpoints of an undirected edge as ``(low, high)``."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise GraphError(f"threshold k must be a positive integer, got {k!r}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids ``0..n-1``.

    ``adj`` holds one sorted, duplicate-free neighbor tuple per vertex and is
    symmetric.  Build instances through :func:`new_graph`, which normalizes
    and validates; the fields are trusted everywhere else.  ``labels``
    optionally maps ids back to external names (e.g. from a DOT file) and
    plays no role in any computation.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges as ``(low, high)`` pairs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex id {v!r} out of range for n={self.n}")

    def distances_from(self, src: int) -> list[int | float]:
        """BFS hop distances from ``src``; ``UNREACHABLE`` where no path exists."""
        self._check_vertex(src)
        dist: list[int | float] = [UNREACHABLE] * self.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            nd = dist[u] + 1
            for w in self.adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = nd
                    queue.append(w)
        return dist

    def distance(self, u: int, v: int) -> int | float:
        """Exact hop distance between ``u`` and ``v``, or ``UNREACHABLE``."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        seen = bytearray(self.n)
        seen[u] = 1
        frontier = [u]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for w in self.adj[x]:
                    if w == v:
                        return d
                    if not seen[w]:
                        seen[w] = 1
                        nxt.append(w)
            frontier = nxt
        return UNREACHABLE

    def components(self) -> list[list[int]]:
        """Connected components as sorted id lists, ordered by smallest member."""
        seen = bytearray(self.n)
        blocks: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = 1
            block = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = 1
                        block.append(w)
                        queue.append(w)
            blocks.append(sorted(block))
        return blocks

    def diameter(self) -> int | float:
        """Largest pairwise distance; ``UNREACHABLE`` when empty or disconnected."""
        if self.n == 0:
            return UNREACHABLE
        best: int | float = 0
        for src in range(self.n):
            worst = max(self.distances_from(src))
            if worst == UNREACHABLE:
                return UNREACHABLE
            best = max(best, worst)
        return best

    def has_k_pair(self, k: int) -> bool:
        """True iff some pair of vertices lies at distance exactly ``k``.

        Scans layered BFS frontiers and reports whether any source still has
        a non-empty frontier after ``k`` expansions.
        """
        _check_k(k)
        for src in range(self.n):
            seen = bytearray(self.n)
            seen[src] = 1
            frontier = [src]
            depth = 0
            while frontier and depth < k:
                nxt = []
                for u in frontier:
                    for w in self.adj[u]:
                        if not seen[w]:
                            seen[w] = 1
                            nxt.append(w)
                frontier = nxt
                depth += 1
            if frontier and depth == k:
                return True
        return False

    def is_failure_state(self, k: int) -> bool:
        """True iff every component's diameter is strictly below ``k``.

        Deliberately computed from per-component diameters rather than the
        exact-distance scan of :meth:`has_k_pair`, so the two predicates stay
        independent implementations of the same condition.
        """
        _check_k(k)
        for comp in self.components():
            if len(comp) == 1:
                continue
            for src in comp:
                dist = self.distances_from(src)
                if max(dist[v] for v in comp) >= k:
                    return False
        return True

    def delete_vertices(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph after removing ``vertices``.

        Returns the new graph together with the old-id -> new-id map for the
        survivors, so callers can keep reporting in original ids.
        """
        doomed = set(vertices)
        for v in doomed:
            self._check_vertex(v)
        survivors = [v for v in range(self.n) if v not in doomed]
        remap = {old: new for new, old in enumerate(survivors)}
        adj = tuple(
            tuple(remap[w] for w in self.adj[old] if w not in doomed)
            for old in survivors
        )
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[old] for old in survivors)
        return Graph(len(survivors), adj, labels), remap

    def delete_edges(self, edges: Iterable[Edge]) -> Graph:
        """Spanning subgraph with ``edges`` removed; an absent edge is an error."""
        doomed: set[Edge] = set()
        for u, v in edges:
            e = normalize_edge(u, v)
            self._check_vertex(e[0])
            self._check_vertex(e[1])
            if e[1] not in self.adj[e[0]]:
                raise GraphError(f"edge {e} not present")
            doomed.add(e)
        adj = tuple(
            tuple(w for w in self.adj[u] if (min(u, w), max(u, w)) not in doomed)
            for u in range(self.n)
        )
        return Graph(self.n, adj, self.labels)


def new_graph(n: int, edges: Iterable[tuple[int, int]], labels: Iterable[str] | None = None) -> Graph:
    """Build a normalized graph: deduplicated edges, sorted symmetric adjacency.

    Rejects self-loops and out-of-range endpoints.  Edge direction and
    duplicates in the input are irrelevant.
    """
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
    label_tuple: tuple[str, ...] | None = None
    if labels is not None:
        label_tuple = tuple(labels)
        if len(label_tuple) != n:
            raise GraphError("label table must name every vertex exactly once")
    dedup: set[Edge] = set()
    for u, v in edges:
        e = normalize_edge(u, v)
        if e[0] < 0 or e[1] >= n:
            raise GraphError(f"edge {e} out of range for n={n}")
        dedup.add(e)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(dedup):
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in nbrs), label_tuple)
