import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import laglab as L
from laglab.errors import InvalidInputError
from laglab.instances import random_hypergraph, random_legal_weighting


class TestWeighting:
    def test_uniform(self):
        assert list(L.uniform(4)) == [0.25, 0.25, 0.25, 0.25]

    def test_is_legal(self):
        assert not L.is_legal((0.5, 0.6))
        assert L.is_legal((0.5, 0.5))
        assert not L.is_legal((-0.1, 1.1))

    def test_renormalizes_small_drift(self):
        w = L.Weighting([0.5, 0.5 + 3e-10])
        assert abs(sum(w) - 1.0) <= 1e-12

    def test_rejects_large_drift(self):
        with pytest.raises(InvalidInputError):
            L.Weighting([0.5, 0.6])

    def test_rejects_negative(self):
        with pytest.raises(InvalidInputError):
            L.Weighting([-0.2, 1.2])

    def test_immutable(self):
        w = L.uniform(3)
        with pytest.raises(ValueError):
            w.as_array()[0] = 1.0

    def test_support(self):
        assert L.support((0.5, 0.5, 1e-15), 1e-12) == {1, 2}
        assert L.support(L.uniform(3)) == {1, 2, 3}


class TestWeightPoly:
    def test_single_edge(self):
        g = L.hypergraph(3, [(1, 2, 3)])
        assert L.weight_poly(g, L.uniform(3)) == pytest.approx(1 / 27, abs=1e-15)

    def test_complete_uniform(self):
        assert L.weight_poly(L.complete(3, 4), L.uniform(4)) == pytest.approx(0.0625)

    def test_empty(self):
        g = L.Hypergraph(3, 5, frozenset())
        assert L.weight_poly(g, L.uniform(5)) == 0.0

    def test_longer_weighting_allowed(self):
        g = L.hypergraph(2, [(1, 2)])
        assert L.weight_poly(g, [0.5, 0.25, 0.25]) == pytest.approx(0.125)

    def test_too_short_rejected(self):
        with pytest.raises(InvalidInputError):
            L.weight_poly(L.complete(3, 4), L.uniform(3))


class TestPartial:
    def test_complete(self):
        assert L.partial(L.complete(3, 4), L.uniform(4), 1) == pytest.approx(0.1875)

    def test_vertex_outside_edges(self):
        # vertex 4 has an empty link, so its partial vanishes
        g = L.hypergraph(3, [(1, 2, 3)], n=4)
        assert L.partial(g, [1 / 3, 1 / 3, 1 / 3, 0.0], 4) == 0.0
        assert L.partial(g, [0.25, 0.25, 0.25, 0.25], 4) == 0.0
        assert L.partial(g, [1 / 3, 1 / 3, 1 / 3, 0.0], 1) == pytest.approx(1 / 9)

    def test_c35_vertex5(self):
        assert L.partial(L.build_colex(3, 5), L.uniform(5), 5) == pytest.approx(0.04)

    def test_partial_is_link_weight(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            r = int(rng.integers(2, 5))
            n = int(rng.integers(r + 1, 8))
            g = random_hypergraph(rng, r, n)
            x = random_legal_weighting(rng, n)
            for i in range(1, n + 1):
                lw = L.weight_poly(L.link(g, {i}), x)
                assert L.partial(g, x, i) == pytest.approx(lw, abs=1e-14)


class TestIdentities:
    @given(st.integers(0, 10_000))
    @settings(max_examples=80, deadline=None)
    def test_euler_identity(self, seed):
        rng = np.random.default_rng([17, seed])
        r = int(rng.integers(2, 6))
        n = int(rng.integers(r, 9))
        g = random_hypergraph(rng, r, n)
        x = random_legal_weighting(rng, n)
        lhs = float((x.as_array() * L.partials(g, x)).sum())
        assert lhs == pytest.approx(g.r * L.weight_poly(g, x), abs=1e-12)

    def test_monotone_in_edges(self):
        from itertools import combinations
        rng = np.random.default_rng(23)
        for _ in range(40):
            r = int(rng.integers(2, 5))
            n = int(rng.integers(r + 1, 8))
            g = random_hypergraph(rng, r, n)
            missing = [e for e in combinations(range(1, n + 1), r)
                       if e not in g.edges]
            if not missing:
                continue
            extra = missing[int(rng.integers(0, len(missing)))]
            x = random_legal_weighting(rng, n)
            bigger = L.Hypergraph(g.r, g.n, g.edges | {extra})
            assert L.weight_poly(bigger, x) >= L.weight_poly(g, x) - 1e-15

    def test_link_bound_against_solver(self):
        # partial at x is at most (1 - x_i)^(r-1) times the link's optimum
        rng = np.random.default_rng(29)
        cfg = L.SolverConfig(restarts=8)
        for _ in range(15):
            r = int(rng.integers(2, 5))
            n = int(rng.integers(r, 8))
            g = random_hypergraph(rng, r, n)
            x = random_legal_weighting(rng, n)
            for i in range(1, n + 1):
                lam_link = L.solve_lagrangian(L.link(g, {i}), cfg).lam
                bound = (1 - x.as_array()[i - 1]) ** (g.r - 1) * lam_link
                assert L.partial(g, x, i) <= bound + 1e-7

    def test_family_weight_empty_set_is_one(self):
        assert L.family_weight([()], [0.3, 0.7]) == 1.0
        assert L.family_weight([(1,), (2,)], [0.3, 0.7]) == pytest.approx(1.0)
