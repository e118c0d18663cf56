"""Shared graph generators for the test suite.

Two flavors on purpose: hypothesis strategies for property tests, and a
plain ``random.Random`` helper for the seeded sweeps whose instance counts
must be fixed and reproducible run to run.
"""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from kdcc import Graph, new_graph


def random_graph(rng: random.Random, max_n: int, min_n: int = 1) -> Graph:
    """A simple undirected graph with a seeded vertex count and edge density."""
    n = rng.randint(min_n, max_n)
    density = rng.random()
    edges = [e for e in combinations(range(n), 2) if rng.random() < density]
    return new_graph(n, edges)


@st.composite
def graphs(draw: st.DrawFn, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = list(combinations(range(n), 2))
    if pool:
        edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    else:
        edges = []
    return new_graph(n, edges)


thresholds = st.integers(min_value=1, max_value=6)
