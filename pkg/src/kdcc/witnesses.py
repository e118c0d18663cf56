"""Constructive minimum deletion sets matching the closed forms.

Each builder returns the concrete vertices/edges whose removal drives the
family instance into a failure state, with exactly the cardinality the
corresponding formula predicts.  Ids always refer to the original graph under
the canonical labeling of :mod:`kdcc.families`; vertices are removed first,
so witness edges never touch a deleted vertex.

Constructions:

* paths: delete every vertex whose 1-based label is a multiple of k+1
  (ids j*(k+1)-1); the mixed variant keeps the first p of those deletions and
  cuts the trailing leftover path after every k-th vertex.
* cycles: delete the vertex with the smallest id, then treat the remainder as
  a path; with no vertex budget (p = 0), open the cycle by deleting the
  closing edge instead and cut the resulting path.
* complete bipartite: delete the whole smaller part; the mixed variant
  deletes p smaller-part vertices and thins each survivor down to a single
  matching edge into the larger part.
* perfect trees: delete every vertex on the levels that are positive
  multiples of ceil(k/2)+1, splitting the tree into shallow subtrees.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .families import (
    Complete,
    CompleteBipartite,
    Cycle,
    FamilySpec,
    Path,
    PerfectTree,
    TreeCoordinate,
    level_size,
    tree_vertex_id,
)
from .formulas import UnsupportedFamilyError, _require_k, cv
from .graph import Edge, Graph, GraphError, normalize_edge


@dataclass(frozen=True)
class Witness:
    """Vertex and edge deletions that force one graph into a failure state.

    Vertices are removed first; every edge in ``edge_set`` must therefore
    survive the vertex deletions, which the constructor enforces.
    """

    vertex_set: frozenset[int]
    edge_set: frozenset[Edge]
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"witness threshold k must be a positive integer, got {self.k!r}")
        for u, v in self.edge_set:
            if u in self.vertex_set or v in self.vertex_set:
                raise GraphError(
                    f"edge ({u}, {v}) touches a deleted vertex; vertices are removed first"
                )

    @property
    def size(self) -> int:
        return len(self.vertex_set) + len(self.edge_set)


def make_witness(vertices: Iterable[int], edges: Iterable[tuple[int, int]], k: int) -> Witness:
    """Normalize raw id collections into a :class:`Witness`."""
    return Witness(
        frozenset(vertices),
        frozenset(normalize_edge(u, v) for u, v in edges),
        k,
    )


def verify_witness(g: Graph, w: Witness) -> bool:
    """Apply ``w`` to ``g`` (vertices first, then edges) and test for failure.

    Raises :class:`~kdcc.graph.GraphError` when the witness does not fit the
    graph: out-of-range ids, or an edge that is absent once the vertices are
    gone.
    """
    for v in w.vertex_set:
        g._check_vertex(v)
    sub, remap = g.delete_vertices(w.vertex_set)
    mapped = []
    for u, v in sorted(w.edge_set):
        g._check_vertex(u)
        g._check_vertex(v)
        mapped.append((remap[u], remap[v]))
    return sub.delete_edges(mapped).is_failure_state(w.k)


def path_vertex_witness(n: int, k: int) -> Witness:
    """Every vertex whose 1-based label is a multiple of k+1 (id j*(k+1)-1)."""
    Path(n)
    _require_k(k)
    ids = [j * (k + 1) - 1 for j in range(1, n // (k + 1) + 1)]
    return make_witness(ids, [], k)


def cycle_vertex_witness(n: int, k: int) -> Witness:
    """Smallest-id vertex plus the path pattern on the remaining n-1 vertices.

    Empty when k exceeds floor(n/2): the cycle is already in a failure state.
    """
    Cycle(n)
    _require_k(k)
    if k > n // 2:
        return make_witness([], [], k)
    # After deleting id 0 the survivors 1..n-1 form a path whose 1-based
    # label m is id m; multiples of k+1 become ids j*(k+1).
    ids = [0] + [j * (k + 1) for j in range(1, (n - 1) // (k + 1) + 1)]
    return make_witness(ids, [], k)


def bipartite_vertex_witness(a: int, b: int, k: int) -> Witness:
    """The entire smaller part (part A on ties); empty when k > 2 or a = b = 1."""
    CompleteBipartite(a, b)
    _require_k(k)
    if k > 2 or (a == 1 and b == 1):
        return make_witness([], [], k)
    ids = range(a) if a <= b else range(a, a + b)
    return make_witness(ids, [], k)


def tree_vertex_witness(r: int, l: int, k: int) -> Witness:
    """All vertices on levels that are positive multiples of ceil(k/2)+1.

    What survives is a forest of perfect subtrees of height at most
    ceil(k/2)-1, each of diameter below k.
    """
    spec = PerfectTree(r, l)
    if r < 2:
        raise ValueError(f"tree witness needs r >= 2, got {r!r}")
    _require_k(k)
    step = (k + 1) // 2 + 1
    ids = []
    for m in range(1, (l + 1) // step + 1):
        level = m * step
        for index in range(1, level_size(spec, level) + 1):
            ids.append(tree_vertex_id(spec, TreeCoordinate(level, index)))
    return make_witness(ids, [], k)


def path_mixed_witness(n: int, k: int, p: int) -> Witness:
    """First ``p`` of the path's vertex deletions plus cuts in the leftover tail.

    The tail component (everything past the last deleted vertex) is cut after
    every k-th vertex, leaving blocks of at most k vertices everywhere.
    """
    spec = Path(n)
    _require_k(k)
    top = cv(spec, k).value
    if not isinstance(p, int) or not 0 <= p <= top:
        raise ValueError(f"p={p!r} outside 0..{top} for Path({n}) at k={k}")
    vertices = [j * (k + 1) - 1 for j in range(1, p + 1)]
    start = p * (k + 1)  # lowest id of the tail component
    tail = n - start
    edges = []
    if tail > 0:
        edges = [(start + j * k - 1, start + j * k) for j in range(1, (tail - 1) // k + 1)]
    return make_witness(vertices, edges, k)


def cycle_mixed_witness(n: int, k: int, p: int) -> Witness:
    """Open the cycle with one vertex (or, when p = 0, one edge) and cut the path.

    * k > floor(n/2): already failed, empty witness.
    * p = cv: the pure vertex witness.
    * p = 0: delete the closing edge (0, n-1), then cut the resulting path
      after every k-th vertex.
    * otherwise: delete id 0, then apply the path mixed pattern with p-1
      vertex deletions to the survivors 1..n-1.
    """
    spec = Cycle(n)
    _require_k(k)
    top = cv(spec, k).value
    if not isinstance(p, int) or not 0 <= p <= top:
        raise ValueError(f"p={p!r} outside 0..{top} for Cycle({n}) at k={k}")
    if k > n // 2:
        return make_witness([], [], k)
    if p == top:
        return cycle_vertex_witness(n, k)
    if p == 0:
        edges = [(0, n - 1)] + [(j * k - 1, j * k) for j in range(1, (n - 1) // k + 1)]
        return make_witness([], edges, k)
    vertices = [0] + [j * (k + 1) for j in range(1, p)]
    start = (p - 1) * (k + 1) + 1  # lowest id of the tail component
    tail = n - start
    edges = [(start + j * k - 1, start + j * k) for j in range(1, (tail - 1) // k + 1)]
    return make_witness(vertices, edges, k)


def bipartite_mixed_witness(a: int, b: int, k: int, p: int) -> Witness:
    """Delete ``p`` smaller-part vertices, then thin each survivor to one edge.

    Survivor i of the smaller part keeps only its edge to the i-th vertex of
    the larger part, so the survivors end up in disjoint matched pairs and
    the untouched larger-part vertices become isolated.  Costs
    (min(a,b) - p) * (max(a,b) - 1) edges.
    """
    CompleteBipartite(a, b)
    _require_k(k)
    top = cv(CompleteBipartite(a, b), k).value
    if not isinstance(p, int) or not 0 <= p <= top:
        raise ValueError(f"p={p!r} outside 0..{top} for CompleteBipartite({a}, {b}) at k={k}")
    if k > 2 or (a == 1 and b == 1):
        return make_witness([], [], k)
    if a <= b:
        small = list(range(a))
        big = list(range(a, a + b))
    else:
        small = list(range(a, a + b))
        big = list(range(a))
    vertices = small[:p]
    edges = []
    for rank, survivor in enumerate(small[p:]):
        keep = big[rank]
        edges.extend((survivor, other) for other in big if other != keep)
    return make_witness(vertices, edges, k)


def vertex_witness(spec: FamilySpec, k: int) -> Witness:
    """Dispatch to the family's vertex construction; size always equals cv."""
    match spec:
        case Path(n=n):
            return path_vertex_witness(n, k)
        case Cycle(n=n):
            return cycle_vertex_witness(n, k)
        case Complete():
            _require_k(k)
            return make_witness([], [], k)
        case CompleteBipartite(a=a, b=b):
            return bipartite_vertex_witness(a, b, k)
        case PerfectTree(r=r, l=l):
            if r == 1:
                return path_vertex_witness(l + 1, k)
            return tree_vertex_witness(r, l, k)
    raise UnsupportedFamilyError(f"no witness construction for {spec!r}")


def mixed_witness(spec: FamilySpec, k: int, p: int) -> Witness:
    """Dispatch to the family's mixed construction; |edges| always equals cm."""
    match spec:
        case Path(n=n):
            return path_mixed_witness(n, k, p)
        case Cycle(n=n):
            return cycle_mixed_witness(n, k, p)
        case Complete():
            _require_k(k)
            if p != 0:
                raise ValueError(f"p={p!r} outside 0..0 for {spec!r} at k={k}")
            return make_witness([], [], k)
        case CompleteBipartite(a=a, b=b):
            return bipartite_mixed_witness(a, b, k, p)
        case PerfectTree():
            raise UnsupportedFamilyError(
                "no closed-form mixed witness for perfect trees; use the exhaustive search"
            )
    raise UnsupportedFamilyError(f"no witness construction for {spec!r}")
