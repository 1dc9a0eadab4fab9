"""Pure-numpy implementations of the hot evaluation/ascent kernels.

Selected at import time when the compiled extension is unavailable (or when
LAGLAB_PURE_PYTHON=1). Semantics match laglab._kernels._core; floating-point
results may differ in the last bits because summation orders differ.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateStartError

BACKEND = "python"


def weight_poly(edges: np.ndarray, x: np.ndarray) -> float:
    """Sum over edges of the product of their coordinates (0-based edges)."""
    if edges.shape[0] == 0:
        return 0.0
    return float(np.multiply.reduce(x[edges], axis=1).sum())


def partials(edges: np.ndarray, x: np.ndarray, n: int):
    """Return (w, grad) where grad[v] = d w / d x_v, via per-edge
    prefix/suffix products (safe in the presence of zero coordinates)."""
    m, r = edges.shape
    grad = np.zeros(n)
    if m == 0:
        return 0.0, grad
    vals = x[edges]
    pre = np.ones((m, r))
    for k in range(1, r):
        pre[:, k] = pre[:, k - 1] * vals[:, k - 1]
    suf = np.ones((m, r))
    for k in range(r - 2, -1, -1):
        suf[:, k] = suf[:, k + 1] * vals[:, k + 1]
    np.add.at(grad, edges, pre * suf)
    w = float((pre[:, r - 1] * vals[:, r - 1]).sum())
    return w, grad


def ascend(edges: np.ndarray, x: np.ndarray, max_iters: int,
           conv_tol: float, resid_tol: float, support_eps: float):
    """Run the multiplicative growth transform x_v <- x_v * grad_v / (r * w)
    in place until the weight improvement drops to conv_tol and the
    stationarity residual drops to resid_tol. The residual is taken over
    coordinates above support_eps: entries below it are decaying to zero and
    their gap measures the (legitimately nonzero) slack of an inactive
    vertex, not lack of convergence.

    Returns (steps, w, resid) for the final x. Raises DegenerateStartError if
    the weight polynomial vanishes at the current point.
    """
    m, r = edges.shape
    n = x.shape[0]
    w_prev = -1.0
    steps = 0
    for it in range(max_iters + 1):
        w, grad = partials(edges, x, n)
        if w <= 0.0:
            raise DegenerateStartError("weight polynomial is zero at start")
        pos = x > support_eps
        resid = float(np.abs(grad[pos] - r * w).max()) if pos.any() else 0.0
        if (w - w_prev) <= conv_tol and resid <= resid_tol:
            return steps, w, resid
        if it == max_iters:
            return steps, w, resid
        x *= grad
        x /= r * w
        x /= x.sum()
        w_prev = w
        steps += 1
    return steps, w, resid
