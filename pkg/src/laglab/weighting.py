"""Legal weightings (points on the standard simplex) and weight evaluation.

The weight polynomial of a hypergraph at x is the sum over edges of the
product of the edge's coordinates; its maximum over the simplex is the
Lagrangian. Per-vertex partials equal the weight polynomial of the vertex
link evaluated at the same point.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InvalidInputError
from .hypergraph import Hypergraph

SUM_TOL = 1e-12        # legality tolerance on sum(x) - 1
RENORM_TOL = 1e-9      # constructor renormalizes up to this, rejects beyond
DEFAULT_ZERO_TOL = 1e-10


class Weighting:
    """Immutable non-negative vector summing to 1 (within SUM_TOL).

    Inputs whose sum deviates from 1 by more than SUM_TOL but at most
    RENORM_TOL are renormalized; larger deviations are rejected.
    """

    __slots__ = ("_x",)

    def __init__(self, values: Iterable[float]):
        x = np.array(list(values), dtype=float)
        if x.ndim != 1 or x.size < 1:
            raise InvalidInputError("weighting must be a non-empty 1-d sequence")
        if (x < 0).any():
            raise InvalidInputError("weighting has a negative entry")
        s = float(x.sum())
        dev = abs(s - 1.0)
        if dev > RENORM_TOL:
            raise InvalidInputError(f"weighting sums to {s!r}, too far from 1")
        if dev > SUM_TOL:
            x = x / s
        x.setflags(write=False)
        self._x = x

    @property
    def n(self) -> int:
        return self._x.size

    def as_array(self) -> np.ndarray:
        """Read-only numpy view of the coordinates (0-based)."""
        return self._x

    def __len__(self) -> int:
        return self._x.size

    def __iter__(self):
        return iter(self._x.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weighting):
            return NotImplemented
        return self._x.shape == other._x.shape and bool((self._x == other._x).all())

    def __repr__(self):
        return f"Weighting({self._x.tolist()!r})"


def uniform(n: int) -> Weighting:
    if n < 1:
        raise InvalidInputError(f"uniform weighting needs n >= 1, got {n}")
    return Weighting(np.full(n, 1.0 / n))


def is_legal(values: Iterable[float], sum_tol: float = SUM_TOL) -> bool:
    """Raw legality check: non-negative and summing to 1 within sum_tol."""
    x = np.asarray(list(values), dtype=float)
    if x.ndim != 1 or x.size < 1 or (x < 0).any():
        return False
    return abs(float(x.sum()) - 1.0) <= sum_tol


def support(x: Weighting | Iterable[float],
            zero_tol: float = DEFAULT_ZERO_TOL) -> frozenset[int]:
    """1-based indices of entries exceeding zero_tol."""
    arr = x.as_array() if isinstance(x, Weighting) else np.asarray(list(x), dtype=float)
    return frozenset(int(i) + 1 for i in np.nonzero(arr > zero_tol)[0])


def _coords(g: Hypergraph, x) -> np.ndarray:
    arr = x.as_array() if isinstance(x, Weighting) else np.asarray(list(x), dtype=float)
    if arr.size < g.n:
        raise InvalidInputError(
            f"weighting of length {arr.size} too short for n={g.n}")
    return np.ascontiguousarray(arr, dtype=float)


def weight_poly(g: Hypergraph, x) -> float:
    """Sum over edges of the product of coordinates, per-edge in index order."""
    return float(_kernels.weight_poly(g.edge_array, _coords(g, x)))


def partials(g: Hypergraph, x) -> np.ndarray:
    """Gradient vector: entry v-1 is the weight polynomial of link({v}) at x."""
    arr = _coords(g, x)
    _, grad = _kernels.partials(g.edge_array, arr, arr.size)
    return grad


def partial(g: Hypergraph, x, i: int) -> float:
    """Weight polynomial of the link of vertex i at x (the i-th partial)."""
    arr = _coords(g, x)
    if not 1 <= i <= arr.size:
        raise InvalidInputError(f"vertex {i} not in [1, {arr.size}]")
    _, grad = _kernels.partials(g.edge_array, arr, arr.size)
    return float(grad[i - 1])


def family_weight(family: Iterable[tuple[int, ...]], x) -> float:
    """Sum of coordinate products over an explicit family of vertex sets.

    Accepts the (r-1)- and (r-2)-set families from pair decompositions; the
    empty set contributes an empty product of 1.
    """
    arr = x.as_array() if isinstance(x, Weighting) else np.asarray(list(x), dtype=float)
    total = 0.0
    for f in family:
        p = 1.0
        for v in f:
            p *= arr[v - 1]
        total += p
    return total
