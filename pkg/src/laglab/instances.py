"""Seeded random instance generators shared by the property suites and tests.

All draws come from a caller-supplied numpy Generator so every consumer is
reproducible from a single seed.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .hypergraph import Hypergraph, hypergraph, uncovered_pairs
from .weighting import Weighting


def random_hypergraph(rng: np.random.Generator, r: int, n: int,
                      m: int | None = None) -> Hypergraph:
    """Uniform random r-graph on [n] with m edges (m itself drawn uniformly
    from [1, C(n, r)] when not given)."""
    universe = list(combinations(range(1, n + 1), r))
    if m is None:
        m = int(rng.integers(1, len(universe) + 1))
    if not 1 <= m <= len(universe):
        raise ValueError(f"m={m} outside [1, {len(universe)}]")
    picks = rng.choice(len(universe), size=m, replace=False)
    return hypergraph(r, [universe[k] for k in picks], n=n)


def random_with_uncovered_pair(rng: np.random.Generator, r: int,
                               n_max: int = 8) -> tuple[Hypergraph, tuple[int, int]]:
    """A random r-graph together with its smallest uncovered pair; edge
    counts are kept sparse enough that rejection terminates quickly."""
    while True:
        n = int(rng.integers(r + 2, n_max + 1))
        cap = max(1, math.comb(n, r) // 3)
        m = int(rng.integers(1, cap + 1))
        g = random_hypergraph(rng, r, n, m)
        pairs = uncovered_pairs(g)
        if pairs:
            return g, pairs[0]


def random_legal_weighting(rng: np.random.Generator, n: int) -> Weighting:
    """Uniform draw from the simplex (Dirichlet with unit parameters)."""
    return Weighting(rng.dirichlet(np.ones(n)))
