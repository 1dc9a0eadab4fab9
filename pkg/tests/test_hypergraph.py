import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import laglab as L
from laglab.errors import InvalidInputError, ParseError, PreconditionError


def edges_of(g):
    return set(g.edges)


class TestColexOrder:
    def test_compare_listing(self):
        assert L.colex_compare((1, 2, 3), (1, 2, 4)) == -1
        assert L.colex_compare((2, 3, 4), (1, 2, 5)) == -1
        assert L.colex_compare((1, 2, 3), (1, 2, 3)) == 0
        assert L.colex_compare((1, 2, 5), (2, 3, 4)) == 1

    def test_compare_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            L.colex_compare((1, 2), (1, 2, 3))

    def test_rank_examples(self):
        assert L.colex_rank((1, 2, 3)) == 1
        assert L.colex_rank((1, 2, 5)) == 5
        assert L.colex_rank((1, 3, 4)) == 3
        assert L.colex_rank((2, 3, 4)) == 4

    def test_unrank_examples(self):
        assert L.colex_unrank(3, 4) == (2, 3, 4)
        assert L.colex_unrank(3, 1) == (1, 2, 3)
        # pairs in colex order: {1,2}, {1,3}, {2,3}
        assert L.colex_unrank(2, 3) == (2, 3)

    def test_unrank_matches_sorted_enumeration(self):
        # independent oracle: sort all 3-subsets of [8] by reversed tuples
        universe = sorted(combinations(range(1, 9), 3), key=lambda e: e[::-1])
        for k, e in enumerate(universe, start=1):
            assert L.colex_unrank(3, k) == e
            assert L.colex_rank(e) == k

    @given(st.integers(2, 6), st.integers(1, 50_000))
    @settings(max_examples=120, deadline=None)
    def test_roundtrip(self, r, k):
        assert L.colex_rank(L.colex_unrank(r, k)) == k

    def test_compare_consistent_with_rank(self):
        for a in combinations(range(1, 7), 3):
            for b in combinations(range(1, 7), 3):
                cmp = L.colex_compare(a, b)
                assert cmp == (L.colex_rank(a) > L.colex_rank(b)) - (
                    L.colex_rank(a) < L.colex_rank(b))


class TestConstruction:
    def test_colex_c35(self):
        g = L.build_colex(3, 5)
        assert g.n == 5
        assert edges_of(g) == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4),
                               (1, 2, 5)}

    def test_colex_complete_prefix(self):
        assert L.build_colex(3, 4) == L.complete(3, 4)
        assert L.build_colex(2, 1) == L.hypergraph(2, [(1, 2)])

    def test_complete_sizes(self):
        assert L.complete(3, 4).m == 4
        assert L.complete(2, 3).m == 3
        assert L.complete(3, 5) == L.build_colex(3, 10)

    def test_complete_rejects_r_above_t(self):
        with pytest.raises(InvalidInputError):
            L.complete(3, 2)

    def test_colex_equals_complete_at_binomials(self):
        for t in range(2, 11):
            for r in range(2, t + 1):
                assert L.build_colex(r, math.comb(t, r)) == L.complete(r, t)

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            L.hypergraph(3, [(1, 1, 2)])
        with pytest.raises(InvalidInputError):
            L.hypergraph(3, [(3, 2, 1)])
        with pytest.raises(InvalidInputError):
            L.Hypergraph(3, 3, frozenset({(1, 2, 4)}))


class TestLinksAndPairs:
    def test_link_examples(self):
        c35 = L.build_colex(3, 5)
        assert edges_of(L.link(c35, {5})) == {(1, 2)}
        assert edges_of(L.link(L.complete(3, 4), {1})) == {(2, 3), (2, 4), (3, 4)}
        assert L.link(c35, {4, 5}).m == 0

    def test_link_uniformity_and_errors(self):
        c35 = L.build_colex(3, 5)
        assert L.link(c35, {5}).r == 2
        assert L.link(c35, {4, 5}).r == 1
        with pytest.raises(InvalidInputError):
            L.link(c35, {1, 2, 3})

    def test_pair_decomposition_c35(self):
        d = L.pair_decomposition(L.build_colex(3, 5), 1, 2)
        assert d.common == {(3,), (4,), (5,)}

    def test_pair_decomposition_complete(self):
        d = L.pair_decomposition(L.complete(3, 4), 1, 2)
        assert d.cross == frozenset()

    def test_pair_decomposition_single_edge(self):
        g = L.hypergraph(3, [(1, 2, 3)], n=4)
        d = L.pair_decomposition(g, 1, 4)
        assert d.only_i == {(2, 3)}
        assert d.common == frozenset()

    def test_pair_decomposition_cross_members(self):
        g = L.build_colex(3, 5)
        for i, j in combinations(range(1, 6), 2):
            d = L.pair_decomposition(g, i, j)
            for f in d.cross:
                assert tuple(sorted(f + (j,))) in g.edges
                assert tuple(sorted(f + (i,))) not in g.edges

    def test_pair_decomposition_rejects_equal(self):
        with pytest.raises(InvalidInputError):
            L.pair_decomposition(L.complete(3, 4), 2, 2)

    def test_covers(self):
        assert L.covers_pairs(L.complete(3, 4))
        assert not L.covers_pair(L.build_colex(3, 5), 4, 5)
        assert not L.covers_pair(L.hypergraph(3, [(1, 2, 3)], n=4), 3, 4)
        assert L.uncovered_pairs(L.build_colex(3, 5)) == [(3, 5), (4, 5)]


class TestCompression:
    def test_compress_examples(self):
        assert edges_of(L.compress(L.hypergraph(3, [(1, 2, 4)]), 3, 4)) == {(1, 2, 3)}
        assert edges_of(L.compress(L.hypergraph(3, [(2, 3, 4)]), 1, 2)) == {(1, 3, 4)}
        g = L.hypergraph(3, [(1, 2, 3)])
        assert L.compress(g, 1, 2) == g

    def test_compress_rejects_bad_pair(self):
        with pytest.raises(InvalidInputError):
            L.compress(L.complete(3, 4), 3, 3)
        with pytest.raises(InvalidInputError):
            L.compress(L.complete(3, 4), 4, 2)

    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_compress_preserves_edge_count(self, data):
        r = data.draw(st.integers(2, 4))
        n = data.draw(st.integers(r + 1, 7))
        universe = list(combinations(range(1, n + 1), r))
        m = data.draw(st.integers(1, min(8, len(universe))))
        idx = data.draw(st.permutations(range(len(universe))))
        g = L.hypergraph(r, [universe[k] for k in idx[:m]], n=n)
        i = data.draw(st.integers(1, n - 1))
        j = data.draw(st.integers(i + 1, n))
        assert L.compress(g, i, j).m == g.m

    def test_left_compressed_against_definition(self):
        # direct all-pairs fixpoint check as the oracle
        def oracle(g):
            return all(L.compress(g, i, j) == g
                       for i in range(1, g.n) for j in range(i + 1, g.n + 1))

        c35 = L.build_colex(3, 5)
        assert L.is_left_compressed(c35) and oracle(c35)
        g = L.hypergraph(3, [(2, 3, 4)], n=4)
        assert (not L.is_left_compressed(g)) and not oracle(g)
        for m in range(1, 11):
            g = L.build_colex(3, m)
            assert L.is_left_compressed(g) == oracle(g) == True  # noqa: E712

    def test_closure_examples(self):
        assert edges_of(L.left_compress_closure(L.hypergraph(3, [(2, 3, 4)]))) == {(1, 2, 3)}
        k34 = L.complete(3, 4)
        assert L.left_compress_closure(k34) == k34

    def test_closure_idempotent_and_preserves_m(self):
        import numpy as np
        from laglab.instances import random_hypergraph
        rng = np.random.default_rng(7)
        for _ in range(60):
            r = int(rng.integers(2, 5))
            n = int(rng.integers(r, 8))
            g = random_hypergraph(rng, r, n)
            c = L.left_compress_closure(g)
            assert c.m == g.m
            assert L.is_left_compressed(c)
            assert L.left_compress_closure(c) == c

    def test_left_compressed_covers_first_vertex_pairs(self):
        import numpy as np
        from laglab.instances import random_hypergraph
        rng = np.random.default_rng(11)
        for _ in range(40):
            r = int(rng.integers(2, 5))
            n = int(rng.integers(r, 8))
            c = L.left_compress_closure(random_hypergraph(rng, r, n))
            for j in range(2, c.n + 1):
                if c.degree(j) > 0:
                    assert L.covers_pair(c, 1, j)


class TestGlueDelete:
    def test_glue_single_edge(self):
        g = L.hypergraph(3, [(1, 2, 3)], n=4)
        glued = L.glue(g, 3, 4)
        assert glued.n == 3 and edges_of(glued) == {(1, 2, 3)}

    def test_glue_merges_common_link(self):
        g = L.hypergraph(3, [(1, 2, 3), (1, 2, 4)], n=4)
        glued = L.glue(g, 3, 4)
        assert glued.m == 1 and edges_of(glued) == {(1, 2, 3)}

    def test_glue_rejects_covered_pair(self):
        with pytest.raises(PreconditionError):
            L.glue(L.complete(3, 4), 1, 2)

    def test_glue_edge_count_formula(self):
        import numpy as np
        from laglab.instances import random_with_uncovered_pair
        rng = np.random.default_rng(3)
        for _ in range(50):
            r = int(rng.integers(2, 5))
            g, (i, j) = random_with_uncovered_pair(rng, r, n_max=8)
            li = edges_of(L.link(g, {i}))
            lj = edges_of(L.link(g, {j}))
            glued = L.glue(g, i, j)
            assert glued.m == g.m - len(li & lj)
            assert glued.m <= g.m
            assert glued.n == g.n - 1

    def test_delete_examples(self):
        assert edges_of(L.delete_vertex(L.complete(3, 4), 4)) == {(1, 2, 3)}
        assert L.delete_vertex(L.build_colex(3, 5), 5) == L.complete(3, 4)
        g = L.delete_vertex(L.hypergraph(3, [(1, 2, 3)]), 2)
        assert g.m == 0 and g.n == 2


class TestJsonFormat:
    def test_roundtrip(self):
        g = L.build_colex(3, 5)
        import json
        assert L.parse_hypergraph(json.dumps(L.to_json_dict(g))) == g

    def test_manifest_key_ignored(self):
        text = '{"r": 2, "n": 3, "edges": [[1, 2]], "manifest": {"x": 1}}'
        assert L.parse_hypergraph(text).m == 1

    def test_rejects_with_line_numbers(self):
        text = '{\n "r": 3,\n "n": 4,\n "edges": [\n  [1, 2, 3],\n  [1, 1, 2]\n ]\n}'
        with pytest.raises(ParseError) as exc:
            L.parse_hypergraph(text)
        assert exc.value.line == 6

    def test_rejects_duplicate(self):
        text = '{"r": 2, "n": 3, "edges": [[1, 2], [1, 2]]}'
        with pytest.raises(ParseError, match="duplicate"):
            L.parse_hypergraph(text)

    def test_rejects_wrong_length(self):
        with pytest.raises(ParseError, match="length"):
            L.parse_hypergraph('{"r": 3, "n": 4, "edges": [[1, 2]]}')

    def test_rejects_out_of_range(self):
        with pytest.raises(ParseError, match="outside"):
            L.parse_hypergraph('{"r": 2, "n": 3, "edges": [[1, 4]]}')

    def test_rejects_bad_json(self):
        with pytest.raises(ParseError):
            L.parse_hypergraph('{"r": 2, "n": 3, "edges": [[1, 2]')

    def test_rejects_missing_key(self):
        with pytest.raises(ParseError, match="missing"):
            L.parse_hypergraph('{"r": 2, "edges": []}')
