"""Closed-form minimum deletion counts for the five graph families.

Three quantities, all relative to a diameter threshold ``k >= 2``:

* ``cv(spec, k)``   -- minimum vertex deletions forcing a failure state.
* ``cm(spec, k, p)`` -- minimum edge deletions after an optimal deletion of
  exactly ``p`` vertices (vertices are always removed first).
* ``curve(spec, k)`` -- the full trade-off ``[(p, cm(spec, k, p))]`` for
  ``p = 0 .. cv(spec, k)``; its endpoints are ``(0, edge-only cost)`` and
  ``(cv, 0)``.

``ce_path`` and ``ce_bipartite`` are the edge-only companion formulas the
mixed results reduce to.  Every value returned here is certified against the
exhaustive search in the test suite; the evaluators themselves never consult
the search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import (
    Complete,
    CompleteBipartite,
    Cycle,
    FamilySpec,
    Path,
    PerfectTree,
)

#: ``provenance`` value for results produced by the evaluators in this module.
CLOSED_FORM = "closed-form"

#: Case tag for the one value that extends beyond the core results: the
#: edge-only cost of a cycle that is not already in a failure state.
EXTENSION_P0 = "extension: p=0"


class UnsupportedFamilyError(ValueError):
    """No closed form covers the request; use the exhaustive search instead."""


@dataclass(frozen=True)
class CVResult:
    """A vertex-deletion minimum together with the formula branch that fired."""

    value: int
    case_tag: str


@dataclass(frozen=True)
class ConnectivityCurve:
    """The (p, q) trade-off pairs for one family instance and threshold."""

    spec: FamilySpec
    k: int
    pairs: tuple[tuple[int, int], ...]


def _require_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"closed forms require an integer k >= 2, got {k!r}")


def tree_witness_cardinality(r: int, l: int, k: int) -> int:
    """Size of the level-deletion witness for the perfect r-ary tree.

    Deleting every vertex on levels that are multiples of ceil(k/2)+1 forces
    a failure state, and no smaller vertex set does.  The count has a closed
    form as a ratio of powers; an explicit geometric sum is evaluated
    alongside and asserted equal, guarding the exact integer division.
    All arithmetic is arbitrary-precision.
    """
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"tree cardinality needs an integer r >= 2, got {r!r}")
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"tree cardinality needs an integer l >= 1, got {l!r}")
    _require_k(k)
    step = (k + 1) // 2 + 1  # ceil(k/2) + 1
    reps = (l + 1) // step
    numerator = r ** (l + 1) - r ** (l + 1 - reps * step)
    closed = numerator // (r ** step - 1)
    summed = sum(r ** (l + 1 - m * step) for m in range(1, reps + 1))
    assert closed * (r ** step - 1) == numerator and closed == summed, (
        f"geometric identity failed for r={r}, l={l}, k={k}"
    )
    return closed


def cv(spec: FamilySpec, k: int) -> CVResult:
    """Minimum vertex deletions that leave every component with diameter < k."""
    _require_k(k)
    match spec:
        case Path(n=n):
            return CVResult(n // (k + 1), "path")
        case Cycle(n=n):
            if k > n // 2:
                return CVResult(0, "cycle: k > floor(n/2)")
            return CVResult((n + k) // (k + 1), "cycle: k <= floor(n/2)")
        case Complete():
            return CVResult(0, "complete")
        case CompleteBipartite(a=a, b=b):
            if a == 1 and b == 1:
                return CVResult(0, "bipartite: a=b=1")
            if k > 2:
                return CVResult(0, "bipartite: k > 2")
            return CVResult(min(a, b), "bipartite: k = 2")
        case PerfectTree(r=r, l=l):
            if r == 1:
                return CVResult(cv(Path(l + 1), k).value, "tree: r=1 -> path")
            return CVResult(tree_witness_cardinality(r, l, k), "tree")
    raise UnsupportedFamilyError(f"no closed form for {spec!r}")


def ce_path(n: int, k: int) -> int:
    """Minimum edge deletions for a path on ``n`` vertices: floor((n-1)/k)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"path edge formula needs an integer n >= 1, got {n!r}")
    _require_k(k)
    return (n - 1) // k


def ce_bipartite(a: int, b: int, k: int) -> int:
    """Minimum edge deletions for the complete bipartite graph.

    Only k = 2 can require deletions (the diameter is at most 2); then the
    cheapest failure state keeps one matching edge per smaller-part vertex,
    costing min(a,b) * (max(a,b) - 1).
    """
    for value in (a, b):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"part sizes must be integers >= 1, got {a!r}, {b!r}")
    _require_k(k)
    if k > 2:
        return 0
    return min(a, b) * (max(a, b) - 1)


def cm_tagged(spec: FamilySpec, k: int, p: int) -> tuple[int, str]:
    """``cm`` plus the case tag naming the branch (or extension) that fired."""
    _require_k(k)
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"p must be a nonnegative integer, got {p!r}")
    if isinstance(spec, PerfectTree):
        raise UnsupportedFamilyError(
            "no closed form for mixed deletions on perfect trees; use the exhaustive search"
        )
    limit = cv(spec, k).value
    if p > limit:
        raise ValueError(f"p={p} outside 0..{limit} for {spec!r} at k={k}")
    match spec:
        case Path(n=n):
            if p == n // (k + 1):
                return 0, "path: p = cv"
            return (n - p * (k + 1) - 1) // k, "path"
        case Cycle(n=n):
            if k > n // 2:
                return 0, "cycle: k > floor(n/2)"
            if p == limit:
                return 0, "cycle: p = cv"
            q = (n - p * (k + 1) - 1) // k + 1
            if p == 0:
                return q, EXTENSION_P0
            return q, "cycle"
        case Complete():
            return 0, "complete"
        case CompleteBipartite(a=a, b=b):
            lo, hi = min(a, b), max(a, b)
            if lo == 1 and hi == 1:
                return 0, "bipartite: a=b=1"
            if k > 2:
                return 0, "bipartite: k > 2"
            return (lo - p) * (hi - 1), "bipartite: k = 2"
    raise UnsupportedFamilyError(f"no closed form for {spec!r}")


def cm(spec: FamilySpec, k: int, p: int) -> int:
    """Minimum edge deletions after an optimal deletion of exactly ``p`` vertices."""
    return cm_tagged(spec, k, p)[0]


def curve(spec: FamilySpec, k: int) -> ConnectivityCurve:
    """All connectivity pairs ``(p, cm(spec, k, p))`` for ``p = 0 .. cv``."""
    top = cv(spec, k).value
    pairs = tuple((p, cm(spec, k, p)) for p in range(top + 1))
    return ConnectivityCurve(spec, k, pairs)
