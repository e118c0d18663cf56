"""Acceptance gate: the eight release criteria, one visible line each.

Every criterion is exact; there are no tolerances to tune.  The two formula
sweeps (vertex and mixed) carry wall-clock budgets, asserted here.  The mixed
sweep is computed once and reused by the packing-bound and curve-endpoint
criteria, which quantify over the same instances.
"""

from __future__ import annotations

import random
import time
from functools import lru_cache

from conftest import random_graph
from kdcc import (
    Complete,
    CompleteBipartite,
    Cycle,
    Graph,
    Path,
    PerfectTree,
    Witness,
    build,
    cm,
    curve,
    cv,
    max_disjoint_k_paths,
    min_edge_disconnecting,
    min_mixed,
    min_vertex_disconnecting,
    mixed_witness,
    tree_witness_cardinality,
    verify_witness,
    vertex_witness,
)

VERTEX_SPECS = (
    [Path(n) for n in range(1, 13)]
    + [Cycle(n) for n in range(3, 13)]
    + [Complete(n) for n in range(1, 9)]
    + [CompleteBipartite(a, b) for a in range(1, 6) for b in range(1, 6)]
    + [PerfectTree(r, l) for r, l in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]]
)
VERTEX_KS = range(2, 7)

MIXED_SPECS = (
    [Path(n) for n in range(1, 11)]
    + [Cycle(n) for n in range(3, 11)]
    + [CompleteBipartite(a, b) for a in range(1, 5) for b in range(1, 5)]
)
MIXED_KS = range(2, 6)


def announce(capsys, label: str, passed: bool) -> None:
    with capsys.disabled():
        print(f"{label}: {'PASS' if passed else 'FAIL'}", flush=True)


@lru_cache(maxsize=1)
def mixed_grid() -> tuple[tuple, float]:
    """Every (spec, k, valid p) run once: formula, search, and packing size."""
    records = []
    t0 = time.perf_counter()
    for spec in MIXED_SPECS:
        g = build(spec)
        for k in MIXED_KS:
            packing = max_disjoint_k_paths(g, k).size
            for p in range(cv(spec, k).value + 1):
                records.append(
                    (spec, k, p, cm(spec, k, p), min_mixed(g, k, p).minimum, packing)
                )
    return tuple(records), time.perf_counter() - t0


def test_criterion_1_vertex_formula_equals_search(capsys):
    t0 = time.perf_counter()
    mismatches = []
    for spec in VERTEX_SPECS:
        g = build(spec)
        for k in VERTEX_KS:
            formula = cv(spec, k).value
            found = min_vertex_disconnecting(g, k).minimum
            if formula != found:
                mismatches.append((spec, k, formula, found))
    elapsed = time.perf_counter() - t0
    passed = not mismatches and elapsed < 300
    announce(capsys, "criterion 1 (vertex formula equals exhaustive search)", passed)
    assert not mismatches, f"{len(mismatches)} mismatches, first: {mismatches[0]}"
    assert elapsed < 300, f"vertex sweep took {elapsed:.1f}s"


def test_criterion_2_mixed_formula_equals_search(capsys):
    records, elapsed = mixed_grid()
    mismatches = [r for r in records if r[3] != r[4]]
    passed = not mismatches and elapsed < 600
    announce(capsys, "criterion 2 (mixed formula equals exhaustive search)", passed)
    assert not mismatches, f"{len(mismatches)} mismatches, first: {mismatches[0]}"
    assert elapsed < 600, f"mixed sweep took {elapsed:.1f}s"


SPOT_VALUES = [
    ("cv", Path(7), 2, None, 2),
    ("cv", Cycle(7), 2, None, 3),
    ("cv", CompleteBipartite(3, 4), 2, None, 3),
    ("cv", PerfectTree(2, 3), 2, None, 5),
    ("cm", Path(7), 2, 1, 1),
    ("cm", Cycle(8), 2, 1, 3),
    ("cm", CompleteBipartite(3, 4), 2, 1, 6),
    ("cv", Cycle(5), 3, None, 0),
]


def test_criterion_3_named_spot_values(capsys):
    failures = []
    for kind, spec, k, p, expected in SPOT_VALUES:
        if kind == "cv":
            formula = cv(spec, k).value
            found = min_vertex_disconnecting(build(spec), k).minimum
        else:
            formula = cm(spec, k, p)
            found = min_mixed(build(spec), k, p).minimum
        if not formula == found == expected:
            failures.append((kind, spec, k, p, expected, formula, found))
    announce(capsys, "criterion 3 (named spot values, both routes)", not failures)
    assert not failures, failures


def witness_is_minimal(g: Graph, w: Witness) -> bool:
    """No single deleted vertex or edge can be spared."""
    for v in w.vertex_set:
        if verify_witness(g, Witness(w.vertex_set - {v}, w.edge_set, w.k)):
            return False
    for e in w.edge_set:
        if verify_witness(g, Witness(w.vertex_set, w.edge_set - {e}, w.k)):
            return False
    return True


def test_criterion_4_witness_validity_and_minimality(capsys):
    failures = []
    checked = 0
    for spec in VERTEX_SPECS:
        g = build(spec)
        for k in VERTEX_KS:
            w = vertex_witness(spec, k)
            checked += 1
            if not verify_witness(g, w):
                failures.append(("invalid", spec, k, None))
            if len(w.vertex_set) != cv(spec, k).value or w.edge_set:
                failures.append(("cardinality", spec, k, None))
            if g.n <= 12 and not witness_is_minimal(g, w):
                failures.append(("redundant", spec, k, None))
    for spec in MIXED_SPECS:
        g = build(spec)
        for k in MIXED_KS:
            for p in range(cv(spec, k).value + 1):
                w = mixed_witness(spec, k, p)
                checked += 1
                if not verify_witness(g, w):
                    failures.append(("invalid", spec, k, p))
                if len(w.vertex_set) != p or len(w.edge_set) != cm(spec, k, p):
                    failures.append(("cardinality", spec, k, p))
                if g.n <= 12 and not witness_is_minimal(g, w):
                    failures.append(("redundant", spec, k, p))
    passed = not failures and checked > 0
    announce(capsys, "criterion 4 (witness validity, cardinality, minimality)", passed)
    assert passed, failures[:5]


def test_criterion_5_lemma_property_suite(capsys):
    failures = []

    rng = random.Random(20260814)
    for _ in range(500):
        g = random_graph(rng, 12)
        for k in range(1, 7):
            if g.is_failure_state(k) != (not g.has_k_pair(k)):
                failures.append(("equivalence", g.n, g.edges(), k))

    rng = random.Random(8141)
    for _ in range(200):
        g = random_graph(rng, 10)
        for k in (2, 3):
            base = max_disjoint_k_paths(g, k).size
            for v in range(g.n):
                h, _ = g.delete_vertices([v])
                if max_disjoint_k_paths(h, k).size < base - 1:
                    failures.append(("vertex-drop", g.edges(), k, v))
            for e in g.edges():
                if max_disjoint_k_paths(g.delete_edges([e]), k).size < base - 1:
                    failures.append(("edge-drop", g.edges(), k, e))

    records, _ = mixed_grid()
    for spec, k, p, _formula, q, packing in records:
        if p + q < packing:
            failures.append(("pair-bound", spec, k, p, q, packing))

    announce(capsys, "criterion 5 (lemma properties: equivalence, drop, p+q bound)", not failures)
    assert not failures, failures[:5]


def test_criterion_6_tree_cardinality_identity(capsys):
    failures = []
    for r in range(2, 6):
        for l in range(1, 9):
            for k in range(2, 10):
                step = (k + 1) // 2 + 1
                bands = (l + 1) // step
                summed = sum(r ** (l + 1 - m * step) for m in range(1, bands + 1))
                if tree_witness_cardinality(r, l, k) != summed:
                    failures.append((r, l, k))
    announce(capsys, "criterion 6 (tree cardinality closed form equals summation)", not failures)
    assert not failures, failures


def test_criterion_7_curve_endpoints(capsys):
    failures = []
    for spec in MIXED_SPECS:
        g = build(spec)
        for k in MIXED_KS:
            pairs = curve(spec, k).pairs
            edge_minimum = min_edge_disconnecting(g, k).minimum
            if pairs[0] != (0, edge_minimum):
                failures.append(("start", spec, k, pairs[0], edge_minimum))
            if pairs[-1] != (cv(spec, k).value, 0):
                failures.append(("end", spec, k, pairs[-1]))
    announce(capsys, "criterion 7 (curve endpoints)", not failures)
    assert not failures, failures[:5]


def test_criterion_8_cycle_extension_guard(capsys):
    failures = []
    for n in range(3, 13):
        g = build(Cycle(n))
        for k in range(2, n // 2 + 1):
            design = (n - 1) // k + 1
            formula = cm(Cycle(n), k, 0)
            found = min_mixed(g, k, 0).minimum
            if not design == formula == found:
                failures.append((n, k, design, formula, found))
    announce(capsys, "criterion 8 (cycle p=0 extension matches the search)", not failures)
    assert not failures, failures
