import numpy as np
import pytest

import laglab as L
from laglab import _kernels
from laglab._kernels import _pycore
from laglab.errors import DegenerateStartError
from laglab.instances import random_hypergraph, random_legal_weighting


def test_backend_reported():
    assert _kernels.backend() in ("cython", "python")


def test_backends_agree_on_evaluation():
    rng = np.random.default_rng(101)
    for _ in range(50):
        r = int(rng.integers(2, 6))
        n = int(rng.integers(r, 9))
        g = random_hypergraph(rng, r, n)
        x = np.asarray(list(random_legal_weighting(rng, n)))
        w_a = _kernels.weight_poly(g.edge_array, x)
        w_b = _pycore.weight_poly(g.edge_array, x)
        assert w_a == pytest.approx(w_b, abs=1e-14)
        wa, ga = _kernels.partials(g.edge_array, x, n)
        wb, gb = _pycore.partials(g.edge_array, x, n)
        assert wa == pytest.approx(wb, abs=1e-14)
        np.testing.assert_allclose(ga, gb, atol=1e-13)


def test_backends_agree_on_ascent():
    rng = np.random.default_rng(202)
    for _ in range(20):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r, 8))
        g = random_hypergraph(rng, r, n)
        x0 = np.asarray(list(random_legal_weighting(rng, n)))
        xa, xb = x0.copy(), x0.copy()
        sa, wa, _ = _kernels.ascend(g.edge_array, xa, 5000, 1e-12, 1e-10, 1e-10)
        sb, wb, _ = _pycore.ascend(g.edge_array, xb, 5000, 1e-12, 1e-10, 1e-10)
        assert wa == pytest.approx(wb, abs=1e-10)
        np.testing.assert_allclose(xa, xb, atol=1e-8)


def test_ascent_monotone_and_legal():
    rng = np.random.default_rng(303)
    for _ in range(20):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r, 8))
        g = random_hypergraph(rng, r, n)
        x = np.asarray(list(random_legal_weighting(rng, n)))
        w_prev = _pycore.weight_poly(g.edge_array, x)
        for _step in range(100):
            _pycore.ascend(g.edge_array, x, 1, -1.0, -1.0, 1e-12)  # force 1 step
            assert abs(x.sum() - 1.0) <= 1e-12
            assert (x >= 0).all()
            w = _pycore.weight_poly(g.edge_array, x)
            assert w >= w_prev - 1e-15
            w_prev = w


def test_degenerate_raises():
    g = L.hypergraph(3, [(1, 2, 3)], n=4)
    x = np.array([0.0, 0.0, 0.0, 1.0])
    with pytest.raises(DegenerateStartError):
        _kernels.ascend(g.edge_array, x.copy(), 10, 1e-12, 1e-10, 1e-10)
    with pytest.raises(DegenerateStartError):
        _pycore.ascend(g.edge_array, x.copy(), 10, 1e-12, 1e-10, 1e-10)


def test_empty_edge_array_weight():
    g = L.Hypergraph(3, 4, frozenset())
    x = np.full(4, 0.25)
    assert _kernels.weight_poly(g.edge_array, x) == 0.0
    assert _pycore.weight_poly(g.edge_array, x) == 0.0
