"""Randomized property suites behind the `verify-lemmas` command.

Each suite draws seeded instances and checks one inequality or invariant of
the solver/weighting layer. A suite returns the first violation it finds (as
a dumpable counterexample) or None. `inject_fault` flips a suite's
comparison so the reporting path can be exercised end to end by the test
harness; it is never set in normal operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, compress, delete_vertex, glue, link
from .instances import (random_hypergraph, random_legal_weighting,
                        random_with_uncovered_pair)
from .solver import SolverConfig, ascent_step, solve_lagrangian
from .weighting import is_legal, partial, partials, weight_poly

INEQ_TOL = 1e-7


@dataclass
class Violation:
    suite: str
    graph: Hypergraph
    weighting: list[float] | None
    detail: str


def _lam(g: Hypergraph, cfg: SolverConfig) -> float:
    return solve_lagrangian(g, cfg).lam


def suite_deletion_bound(trials, rng, cfg, fault=False):
    """Uncovered pair: the value is at most the better of the two deletions."""
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        g, (i, j) = random_with_uncovered_pair(rng, r, n_max=7)
        lhs = _lam(g, cfg)
        rhs = max(_lam(delete_vertex(g, i), cfg), _lam(delete_vertex(g, j), cfg))
        bound = rhs - 1e-3 if fault else rhs + INEQ_TOL
        if lhs > bound:
            return Violation("deletion-bound", g, None,
                             f"value {lhs!r} above deletion bound {rhs!r} "
                             f"for pair ({i}, {j})")
    return None


def suite_gluing(trials, rng, cfg, fault=False):
    """Gluing an uncovered pair never decreases the value."""
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        g, (i, j) = random_with_uncovered_pair(rng, r, n_max=7)
        lhs = _lam(g, cfg)
        rhs = _lam(glue(g, i, j), cfg)
        bound = rhs - 1e-3 if fault else rhs + INEQ_TOL
        if lhs > bound:
            return Violation("gluing", g, None,
                             f"value {lhs!r} above glued value {rhs!r} "
                             f"for pair ({i}, {j})")
    return None


def suite_compression(trials, rng, cfg, fault=False):
    """Compression never decreases the value."""
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r + 1, 8))
        g = random_hypergraph(rng, r, n)
        i = int(rng.integers(1, n))
        j = int(rng.integers(i + 1, n + 1))
        before = _lam(g, cfg)
        after = _lam(compress(g, i, j), cfg)
        bound = before + 1e-3 if fault else before - INEQ_TOL
        if after < bound:
            return Violation("compression", g, None,
                             f"compressed value {after!r} below {before!r} "
                             f"for pair ({i}, {j})")
    return None


def suite_euler_identity(trials, rng, cfg, fault=False):
    """sum_v x_v * grad_v = r * w (degree-r homogeneity)."""
    for _ in range(trials):
        r = int(rng.integers(2, 6))
        n = int(rng.integers(r, 9))
        g = random_hypergraph(rng, r, n)
        x = random_legal_weighting(rng, n)
        arr = x.as_array()
        lhs = float((arr * partials(g, x)).sum())
        rhs = g.r * weight_poly(g, x)
        tol = 0.0 if fault else 1e-12
        if abs(lhs - rhs) > tol:
            return Violation("euler-identity", g, list(x),
                             f"sum x*grad = {lhs!r} but r*w = {rhs!r}")
    return None


def suite_link_bound(trials, rng, cfg, fault=False):
    """grad_v at x is at most (1 - x_v)^(r-1) times the link's Lagrangian."""
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r, 8))
        g = random_hypergraph(rng, r, n)
        x = random_legal_weighting(rng, n)
        for i in range(1, n + 1):
            lhs = partial(g, x, i)
            link_lam = _lam(link(g, {i}), cfg)
            rhs = (1.0 - x.as_array()[i - 1]) ** (g.r - 1) * link_lam
            bound = rhs - 1e-3 if fault else rhs + INEQ_TOL
            if lhs > bound:
                return Violation("link-bound", g, list(x),
                                 f"partial {lhs!r} above link bound {rhs!r} "
                                 f"at vertex {i}")
    return None


def suite_edge_monotonicity(trials, rng, cfg, fault=False):
    """Adding an edge never decreases the weight at a fixed legal point."""
    import math
    from itertools import combinations
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r + 1, 8))
        cap = math.comb(n, r)
        g = random_hypergraph(rng, r, n, m=int(rng.integers(1, min(6, cap) + 1)))
        missing = [e for e in combinations(range(1, n + 1), r) if e not in g.edges]
        if not missing:
            continue
        extra = missing[int(rng.integers(0, len(missing)))]
        x = random_legal_weighting(rng, n)
        before = weight_poly(g, x)
        after = weight_poly(Hypergraph(g.r, g.n, g.edges | {extra}), x)
        bound = before + 1e-3 if fault else before - 1e-15
        if after < bound:
            return Violation("edge-monotonicity", g, list(x),
                             f"weight dropped from {before!r} to {after!r} "
                             f"after adding {extra}")
    return None


def suite_ascent_monotonicity(trials, rng, cfg, fault=False):
    """The growth transform never decreases the weight along a trajectory,
    and every iterate stays legal within 1e-12."""
    steps = 60
    for _ in range(trials):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r, 8))
        g = random_hypergraph(rng, r, n)
        x = random_legal_weighting(rng, n)
        w_prev = weight_poly(g, x)
        if w_prev <= 0:
            continue
        for _step in range(steps):
            x = ascent_step(g, x)
            if not is_legal(list(x), sum_tol=1e-12):
                return Violation("ascent-monotonicity", g, list(x),
                                 "iterate left the simplex")
            w = weight_poly(g, x)
            slack = -1e-3 if fault else 1e-15
            if w < w_prev - slack:
                return Violation("ascent-monotonicity", g, list(x),
                                 f"weight decreased {w_prev!r} -> {w!r}")
            w_prev = w
    return None


SUITES = {
    "deletion-bound": suite_deletion_bound,
    "gluing": suite_gluing,
    "compression": suite_compression,
    "euler-identity": suite_euler_identity,
    "link-bound": suite_link_bound,
    "edge-monotonicity": suite_edge_monotonicity,
    "ascent-monotonicity": suite_ascent_monotonicity,
}


def run_suites(trials: int, seed: int, cfg: SolverConfig | None = None,
               inject_fault: str | None = None):
    """Run every suite with its own seeded stream. Returns (results,
    violations): results maps suite name to "pass"/"fail"."""
    cfg = cfg or SolverConfig(rng_seed=seed)
    results: dict[str, str] = {}
    violations: list[Violation] = []
    for idx, (name, fn) in enumerate(SUITES.items()):
        rng = np.random.default_rng([seed, 1000 + idx])
        violation = fn(trials, rng, cfg, fault=(inject_fault == name))
        if violation is None:
            results[name] = "pass"
        else:
            results[name] = "fail"
            violations.append(violation)
    return results, violations
