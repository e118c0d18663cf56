"""Canonical generators for the graph families with known closed forms.

Vertex ids are fixed by construction so that witness builders can name exact
vertices:

* ``Path(n)``: ids 0..n-1 in order along the path.
* ``Cycle(n)``: ids 0..n-1 in cyclic order (closing edge between n-1 and 0).
* ``Complete(n)``: every pair adjacent.
* ``CompleteBipartite(a, b)``: part A is 0..a-1, part B is a..a+b-1.
* ``PerfectTree(r, l)``: perfect r-ary tree of height l.  Levels count from
  the leaves: leaves sit on level 1 and the root on level l+1.  Ids are
  assigned level-major from the root level downward and index-minor within a
  level; :func:`tree_vertex_id` is the bijection from (level, index)
  coordinates to ids and :func:`tree_coordinate` its inverse.

Path and cycle formulas are often stated in 1-based vertex "labels"; label m
is always id m-1 under the construction above (for cycles, label m = id m-1
around the cycle).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph, new_graph


@dataclass(frozen=True)
class Path:
    """Path on ``n >= 1`` vertices."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"Path needs an integer n >= 1, got {self.n!r}")


@dataclass(frozen=True)
class Cycle:
    """Cycle on ``n >= 3`` vertices."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"Cycle needs an integer n >= 3, got {self.n!r}")


@dataclass(frozen=True)
class Complete:
    """Complete graph on ``n >= 1`` vertices."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"Complete needs an integer n >= 1, got {self.n!r}")


@dataclass(frozen=True)
class CompleteBipartite:
    """Complete bipartite graph with part sizes ``a, b >= 1``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        for value in (self.a, self.b):
            if not isinstance(value, int) or value < 1:
                raise ValueError(
                    f"CompleteBipartite needs integer part sizes >= 1, got {self.a!r}, {self.b!r}"
                )


@dataclass(frozen=True)
class PerfectTree:
    """Perfect r-ary tree of height ``l >= 1`` with arity ``r >= 1``."""

    r: int
    l: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"PerfectTree needs an integer arity r >= 1, got {self.r!r}")
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError(f"PerfectTree needs an integer height l >= 1, got {self.l!r}")


FamilySpec = Path | Cycle | Complete | CompleteBipartite | PerfectTree


class TreeCoordinate(NamedTuple):
    """Position in a perfect tree: level 1 (leaves) .. l+1 (root), 1-based index."""

    level: int
    index: int


def tree_vertex_count(r: int, l: int) -> int:
    """Total vertices of the perfect r-ary tree of height l."""
    if r == 1:
        return l + 1
    return (r ** (l + 1) - 1) // (r - 1)


def level_size(spec: PerfectTree, level: int) -> int:
    """Number of vertices on ``level`` (root level has one, leaves r**l)."""
    if not 1 <= level <= spec.l + 1:
        raise ValueError(f"level {level} outside 1..{spec.l + 1}")
    return spec.r ** (spec.l + 1 - level)


def _count_above(spec: PerfectTree, level: int) -> int:
    # vertices on levels level+1 .. l+1 (a geometric run ending at the root)
    height = spec.l + 1 - level
    if spec.r == 1:
        return height
    return (spec.r ** height - 1) // (spec.r - 1)


def tree_vertex_id(spec: PerfectTree, coord: TreeCoordinate) -> int:
    """Id of the vertex at ``coord``; ids grow from the root level downward."""
    level, index = coord
    size = level_size(spec, level)
    if not 1 <= index <= size:
        raise ValueError(f"index {index} outside 1..{size} on level {level}")
    return _count_above(spec, level) + (index - 1)


def tree_coordinate(spec: PerfectTree, vid: int) -> TreeCoordinate:
    """Inverse of :func:`tree_vertex_id`."""
    total = tree_vertex_count(spec.r, spec.l)
    if not 0 <= vid < total:
        raise ValueError(f"vertex id {vid} outside 0..{total - 1}")
    for level in range(spec.l + 1, 0, -1):
        start = _count_above(spec, level)
        size = level_size(spec, level)
        if vid < start + size:
            return TreeCoordinate(level, vid - start + 1)
    raise AssertionError("unreachable: every id lies on some level")


def _build_tree(spec: PerfectTree) -> Graph:
    r = spec.r
    edges = []
    for level in range(spec.l + 1, 1, -1):
        for index in range(1, level_size(spec, level) + 1):
            parent = tree_vertex_id(spec, TreeCoordinate(level, index))
            for child_index in range((index - 1) * r + 1, index * r + 1):
                child = tree_vertex_id(spec, TreeCoordinate(level - 1, child_index))
                edges.append((parent, child))
    return new_graph(tree_vertex_count(r, spec.l), edges)


def build(spec: FamilySpec) -> Graph:
    """Materialize a family spec as a concrete graph with canonical ids."""
    match spec:
        case Path(n=n):
            return new_graph(n, [(i, i + 1) for i in range(n - 1)])
        case Cycle(n=n):
            return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
        case Complete(n=n):
            return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        case CompleteBipartite(a=a, b=b):
            return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
        case PerfectTree():
            return _build_tree(spec)
    raise TypeError(f"unknown family spec: {spec!r}")
