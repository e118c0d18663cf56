"""Exhaustive searches certifying the closed forms on small instances.

Minimum deletion sets are found by sweeping candidate subsets in ascending
size and, within a size, lexicographic order; the first success is therefore
a provably minimum and deterministic witness (lexicographically least among
optima).  A maximum vertex-disjoint packing of geodesic k-paths supplies the
lower bound used for pruning: every deletion set must break every packed
path, and no minimum can be smaller than the packing (for mixed deletions,
p + q can never drop below it).

All searches accept any graph and any k >= 1, independent of the closed
forms.  Instances above the configured size limits are refused loudly; there
is no approximate fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, Graph
from .witnesses import Witness, make_witness

DEFAULT_VERTEX_LIMIT = 20
DEFAULT_EDGE_LIMIT = 24


class SearchLimitExceeded(RuntimeError):
    """The instance is larger than the configured exhaustive-search budget."""


@dataclass(frozen=True)
class OracleResult:
    """A certified minimum, its witness, and the number of failure checks run."""

    minimum: int
    witness: Witness
    explored: int


@dataclass(frozen=True)
class PathPacking:
    """Pairwise vertex-disjoint geodesic k-paths (each a vertex id sequence).

    ``certified`` marks whether the packing is a proven maximum (exhaustive
    branch-and-bound) or only a greedy lower bound.
    """

    k: int
    paths: tuple[tuple[int, ...], ...]
    certified: bool

    @property
    def size(self) -> int:
        return len(self.paths)


def _validate_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"search threshold k must be a positive integer, got {k!r}")


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u in range(g.n):
        acc = 0
        for v in g.adj[u]:
            acc |= 1 << v
        masks[u] = acc
    return masks


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _has_k_pair_masked(adj: list[int], alive: int, k: int) -> bool:
    # Layered BFS per source, restricted to `alive`; a non-empty frontier
    # after k expansions is a pair at distance exactly k.
    for src in _iter_bits(alive):
        seen = 1 << src
        frontier = seen
        depth = 0
        while frontier and depth < k:
            grown = 0
            for v in _iter_bits(frontier):
                grown |= adj[v]
            frontier = grown & alive & ~seen
            seen |= frontier
            depth += 1
        if frontier and depth == k:
            return True
    return False


def _masked_distances(adj: list[int], alive: int, src: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    depth = 0
    while frontier:
        depth += 1
        grown = 0
        for v in _iter_bits(frontier):
            grown |= adj[v]
        frontier = grown & alive & ~seen
        seen |= frontier
        for v in _iter_bits(frontier):
            dist[v] = depth
    return dist


def _all_geodesic_k_paths(adj: list[int], alive: int, k: int, n: int) -> list[tuple[int, ...]]:
    """Every path of length k whose endpoints are at distance exactly k.

    Paths are oriented from the smaller endpoint and returned sorted, so the
    enumeration order is deterministic.
    """
    dist = {src: _masked_distances(adj, alive, src, n) for src in _iter_bits(alive)}
    paths: list[tuple[int, ...]] = []
    for u in _iter_bits(alive):
        du = dist[u]
        for v in _iter_bits(alive):
            if v <= u or du[v] != k:
                continue
            dv = dist[v]
            prefix = [u]

            def grow(x: int, depth: int) -> None:
                if depth == k:
                    paths.append(tuple(prefix))
                    return
                for w in _iter_bits(adj[x] & alive):
                    if du[w] == depth + 1 and dv[w] == k - depth - 1:
                        prefix.append(w)
                        grow(w, depth + 1)
                        prefix.pop()

            grow(u, 0)
    paths.sort()
    return paths


def _vertex_mask(path: tuple[int, ...]) -> int:
    acc = 0
    for v in path:
        acc |= 1 << v
    return acc


def _greedy_disjoint(paths: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    used = 0
    chosen = []
    for path in paths:
        mask = _vertex_mask(path)
        if mask & used == 0:
            chosen.append(path)
            used |= mask
    return chosen


def _max_disjoint(paths: list[tuple[int, ...]], k: int, n: int) -> list[tuple[int, ...]]:
    # Branch and bound over paths in lexicographic order; strict improvement
    # keeps the first maximum found, which makes the result deterministic.
    masks = [_vertex_mask(p) for p in paths]
    best: list[int] = []
    chosen: list[int] = []

    def search(cands: list[int], used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        free = n - used.bit_count()
        for pos, i in enumerate(cands):
            if len(chosen) + min(len(cands) - pos, free // (k + 1)) <= len(best):
                return
            grown = used | masks[i]
            chosen.append(i)
            search([j for j in cands[pos + 1:] if masks[j] & grown == 0], grown)
            chosen.pop()

    search(list(range(len(paths))), 0)
    return [paths[i] for i in best]


def max_disjoint_k_paths(
    g: Graph, k: int, limit_n: int = DEFAULT_VERTEX_LIMIT, exact: bool = True
) -> PathPacking:
    """Maximum (or, with ``exact=False``, greedy) disjoint geodesic k-paths."""
    _validate_k(k)
    if exact and g.n > limit_n:
        raise SearchLimitExceeded(
            f"exact packing search allows n <= {limit_n}, got n={g.n}; "
            "raise the limit or use exact=False"
        )
    adj = _adjacency_masks(g)
    alive = (1 << g.n) - 1
    paths = _all_geodesic_k_paths(adj, alive, k, g.n)
    if not exact:
        return PathPacking(k, tuple(_greedy_disjoint(paths)), False)
    return PathPacking(k, tuple(_max_disjoint(paths, k, g.n)), True)


def min_vertex_disconnecting(
    g: Graph, k: int, limit_n: int = DEFAULT_VERTEX_LIMIT
) -> OracleResult:
    """Smallest vertex set whose removal leaves every component below diameter k.

    Sweeps subset sizes upward starting at the certified packing size (no
    smaller set can work) and skips candidates that leave some packed path
    untouched (such a set cannot work either).  ``explored`` counts the
    candidates whose failure check actually ran.
    """
    _validate_k(k)
    if g.n > limit_n:
        raise SearchLimitExceeded(f"vertex search allows n <= {limit_n}, got n={g.n}")
    adj = _adjacency_masks(g)
    full = (1 << g.n) - 1
    packing = max_disjoint_k_paths(g, k, limit_n=limit_n)
    path_masks = [_vertex_mask(p) for p in packing.paths]
    explored = 0
    for size in range(packing.size, g.n + 1):
        for combo in combinations(range(g.n), size):
            dmask = 0
            for v in combo:
                dmask |= 1 << v
            if any(pm & dmask == 0 for pm in path_masks):
                continue
            explored += 1
            if not _has_k_pair_masked(adj, full & ~dmask, k):
                return OracleResult(size, make_witness(combo, [], k), explored)
    raise AssertionError("unreachable: deleting every vertex is a failure state")


def _edge_mask(path: tuple[int, ...], edge_index: dict[Edge, int]) -> int:
    acc = 0
    for a, b in zip(path, path[1:]):
        acc |= 1 << edge_index[(a, b) if a < b else (b, a)]
    return acc


def _sweep_edge_subsets(
    adj: list[int],
    alive: int,
    edges: list[Edge],
    k: int,
    start_size: int,
    path_masks: list[int],
    cap: int | None,
) -> tuple[tuple[int, tuple[Edge, ...]] | None, int]:
    """Ascending-size lexicographic sweep over edge subsets.

    Returns ``((size, edges), explored)`` for the first success, or
    ``(None, explored)`` when no subset of size <= cap works.
    """
    m = len(edges)
    top = m if cap is None else min(cap, m)
    explored = 0
    for size in range(start_size, top + 1):
        for combo in combinations(range(m), size):
            emask = 0
            for i in combo:
                emask |= 1 << i
            if any(pm & emask == 0 for pm in path_masks):
                continue
            explored += 1
            trimmed = list(adj)
            for i in combo:
                u, v = edges[i]
                trimmed[u] &= ~(1 << v)
                trimmed[v] &= ~(1 << u)
            if not _has_k_pair_masked(trimmed, alive, k):
                return (size, tuple(edges[i] for i in combo)), explored
    return None, explored


def min_edge_disconnecting(
    g: Graph, k: int, limit_e: int = DEFAULT_EDGE_LIMIT
) -> OracleResult:
    """Smallest edge set whose removal leaves every component below diameter k."""
    _validate_k(k)
    edges = g.edges()
    if len(edges) > limit_e:
        raise SearchLimitExceeded(f"edge search allows |E| <= {limit_e}, got |E|={len(edges)}")
    adj = _adjacency_masks(g)
    alive = (1 << g.n) - 1
    # The packing only prunes, so a greedy one is sound when the exact search
    # would be refused for vertex count.
    if g.n <= DEFAULT_VERTEX_LIMIT:
        packing = max_disjoint_k_paths(g, k)
    else:
        packing = max_disjoint_k_paths(g, k, exact=False)
    edge_index = {e: i for i, e in enumerate(edges)}
    path_masks = [_edge_mask(p, edge_index) for p in packing.paths]
    found, explored = _sweep_edge_subsets(adj, alive, edges, k, packing.size, path_masks, None)
    assert found is not None, "unreachable: deleting every edge is a failure state"
    size, chosen = found
    return OracleResult(size, make_witness([], chosen, k), explored)


def min_mixed(
    g: Graph,
    k: int,
    p: int,
    limit_n: int = DEFAULT_VERTEX_LIMIT,
    limit_e: int = DEFAULT_EDGE_LIMIT,
) -> OracleResult:
    """Minimum edge deletions over every way of first deleting exactly ``p`` vertices.

    ``p`` may not exceed the vertex minimum (that is checked, strictly).  The
    witness carries both the achieving vertex set and its edge set, all in
    original ids; ``minimum`` is the edge count alone.
    """
    _validate_k(k)
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"p must be a nonnegative integer, got {p!r}")
    if g.n > limit_n:
        raise SearchLimitExceeded(f"mixed search allows n <= {limit_n}, got n={g.n}")
    all_edges = g.edges()
    if len(all_edges) > limit_e:
        raise SearchLimitExceeded(
            f"mixed search allows |E| <= {limit_e}, got |E|={len(all_edges)}"
        )
    vertex_minimum = min_vertex_disconnecting(g, k, limit_n=limit_n).minimum
    if p > vertex_minimum:
        raise ValueError(f"p={p} exceeds the vertex deletion minimum {vertex_minimum}")
    packing = max_disjoint_k_paths(g, k, limit_n=limit_n)
    floor_q = max(0, packing.size - p)
    adj = _adjacency_masks(g)
    full = (1 << g.n) - 1
    best: tuple[int, tuple[int, ...], tuple[Edge, ...]] | None = None
    explored = 0
    for vcombo in combinations(range(g.n), p):
        vmask = 0
        for v in vcombo:
            vmask |= 1 << v
        alive = full & ~vmask
        cap = None if best is None else best[0] - 1
        sub_edges = [e for e in all_edges if vmask & ((1 << e[0]) | (1 << e[1])) == 0]
        greedy = _greedy_disjoint(_all_geodesic_k_paths(adj, alive, k, g.n))
        start = max(floor_q, len(greedy))
        if cap is not None and start > cap:
            continue
        edge_index = {e: i for i, e in enumerate(sub_edges)}
        path_masks = [_edge_mask(path, edge_index) for path in greedy]
        found, checks = _sweep_edge_subsets(adj, alive, sub_edges, k, start, path_masks, cap)
        explored += checks
        if found is not None:
            best = (found[0], vcombo, found[1])
            if best[0] == floor_q:
                break
    assert best is not None, "some vertex set of size p always admits an edge answer"
    q, vcombo, chosen = best
    return OracleResult(q, make_witness(vcombo, chosen, k), explored)
