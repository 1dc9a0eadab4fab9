"""Lagrangian computation with optimality certificates.

The optimizer is the multiplicative growth transform

    x_v  <-  x_v * grad_v / (r * w),

which preserves the simplex exactly and never decreases the weight
polynomial of a hypergraph (non-negative coefficients, homogeneous of degree
r), so there is no step size to tune. Fixpoints satisfy the stationarity
condition grad_v = r * w on the support. Global optimality is approached by
restarting from the uniform point, from degree-seeded subsets, and from
Dirichlet(1) random draws; the certificate reports the best value found, its
support size and the stationarity (KKT) residual. The reported value is a
lower bound on the true Lagrangian by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import DegenerateStartError, InvalidInputError
from .hypergraph import Hypergraph, link
from .weighting import (DEFAULT_ZERO_TOL, Weighting, partial, weight_poly)

LAM_TIE = 1e-13        # value ties across restarts broken structurally below this
RESID_TARGET = 1e-10   # stationarity residual the iteration keeps pushing for
POLISH_ITERS = 50      # guaranteed iteration budget after support truncation
RATIONAL_DENOM = 10 ** 6


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 16
    max_iters: int = 100_000
    conv_tol: float = 1e-12
    zero_tol: float = 1e-10
    rng_seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise InvalidInputError("restarts must be >= 1")
        if self.max_iters < 1:
            raise InvalidInputError("max_iters must be >= 1")
        if not (self.conv_tol > 0 and self.zero_tol > 0):
            raise InvalidInputError("tolerances must be positive")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise InvalidInputError("rng_seed must fit in 64 bits")


@dataclass(frozen=True)
class LagrangianCertificate:
    """A claimed optimum: weights sorted non-increasing, the relabeling that
    sorts them, the achieved value, support size and stationarity residual.

    permutation[k] is the original (1-based) vertex whose weight landed in
    sorted slot k, so original_weights() reconstructs the unsorted point.
    """

    x: tuple[float, ...]
    lam: float
    support_size: int
    kkt_residual: float
    iterations_used: int
    permutation: tuple[int, ...]

    def original_weights(self, n: int | None = None) -> np.ndarray:
        n = len(self.x) if n is None else n
        out = np.zeros(n)
        for slot, v in enumerate(self.permutation):
            out[v - 1] = self.x[slot]
        return out

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "x": list(self.x),
            "support_size": self.support_size,
            "kkt_residual": self.kkt_residual,
            "iterations": self.iterations_used,
            "permutation": list(self.permutation),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LagrangianCertificate":
        try:
            return cls(
                x=tuple(float(v) for v in data["x"]),
                lam=float(data["lambda"]),
                support_size=int(data["support_size"]),
                kkt_residual=float(data["kkt_residual"]),
                iterations_used=int(data["iterations"]),
                permutation=tuple(int(v) for v in data["permutation"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed certificate: {exc}") from exc


def ascent_step(g: Hypergraph, x: Weighting) -> Weighting:
    """One growth-transform step. The output is legal and its weight is at
    least the input's; raises DegenerateStartError when the weight is zero."""
    arr = np.array(x.as_array(), dtype=float)
    w, grad = _kernels.partials(g.edge_array, arr, arr.size)
    if w <= 0.0:
        raise DegenerateStartError("weight polynomial vanishes at this point")
    arr *= grad
    arr /= g.r * w
    return Weighting(arr / arr.sum())


def kkt_residual(g: Hypergraph, x, zero_tol: float = DEFAULT_ZERO_TOL) -> float:
    """Stationarity residual at x: max |grad_v - r*w| over the support,
    joined with max(0, grad_v - r*w) over zero coordinates (one-sided
    complementary slackness)."""
    arr = x.as_array() if isinstance(x, Weighting) else np.asarray(list(x), dtype=float)
    arr = np.ascontiguousarray(arr, dtype=float)
    if arr.size < g.n:
        raise InvalidInputError(f"weighting of length {arr.size} too short for n={g.n}")
    w, grad = _kernels.partials(g.edge_array, arr, arr.size)
    rw = g.r * w
    on = arr > zero_tol
    resid = float(np.abs(grad[on] - rw).max()) if on.any() else 0.0
    if (~on).any():
        resid = max(resid, max(0.0, float((grad[~on] - rw).max())))
    return resid


def _certificate(g: Hypergraph, arr: np.ndarray, steps: int,
                 zero_tol: float) -> LagrangianCertificate:
    order = np.argsort(-arr, kind="stable")
    return LagrangianCertificate(
        x=tuple(float(v) for v in arr[order]),
        lam=weight_poly(g, arr),
        support_size=int((arr > zero_tol).sum()),
        kkt_residual=kkt_residual(g, arr, zero_tol),
        iterations_used=steps,
        permutation=tuple(int(v) + 1 for v in order),
    )


def _solve_from(g: Hypergraph, x0: np.ndarray, cfg: SolverConfig) -> LagrangianCertificate:
    edges = g.edge_array
    arr = np.array(x0, dtype=float)
    steps, _, _ = _kernels.ascend(edges, arr, cfg.max_iters, cfg.conv_tol,
                                  RESID_TARGET, cfg.zero_tol)
    # kill numerically-dead coordinates, then polish on the clean support
    small = (arr < cfg.zero_tol) & (arr > 0.0)
    if small.any():
        arr[small] = 0.0
        arr /= arr.sum()
    polish_budget = max(POLISH_ITERS, cfg.max_iters - steps)
    more, _, _ = _kernels.ascend(edges, arr, polish_budget, cfg.conv_tol,
                                 RESID_TARGET, cfg.zero_tol)
    return _certificate(g, arr, steps + more, cfg.zero_tol)


def _starts(g: Hypergraph, cfg: SolverConfig):
    n = g.n
    yield np.full(n, 1.0 / n)
    # degree-seeded supports: uniform on the top-s vertices by degree, one
    # start per size s; optima tend to sit on small dense supports
    by_degree = sorted(range(1, n + 1), key=lambda v: (-g.degree(v), v))
    for s in range(g.r, min(n, g.r + 3) + 1):
        x0 = np.zeros(n)
        for v in by_degree[:s]:
            x0[v - 1] = 1.0 / s
        yield x0
    for k in range(cfg.restarts):
        rng = np.random.default_rng([cfg.rng_seed, k])
        yield rng.dirichlet(np.ones(n))


def better_certificate(a: LagrangianCertificate,
                       b: LagrangianCertificate) -> LagrangianCertificate:
    """Deterministic, order-independent reduction across restarts: larger
    value wins; values within LAM_TIE tie-break to smaller support, then
    lexicographically smaller sorted weights, then smaller residual."""
    if a.lam > b.lam + LAM_TIE:
        return a
    if b.lam > a.lam + LAM_TIE:
        return b
    for key in ("support_size", "x", "kkt_residual", "iterations_used",
                "permutation"):
        ka, kb = getattr(a, key), getattr(b, key)
        if ka != kb:
            return a if ka < kb else b
    return a


def solve_lagrangian(g: Hypergraph, cfg: SolverConfig | None = None) -> LagrangianCertificate:
    """Best certificate over the full restart schedule.

    The edgeless hypergraph gets the defined result: value 0, empty support,
    uniform weights. A start where the weight polynomial vanishes (possible
    for the seeded subsets) is replaced by a fresh Dirichlet draw.
    """
    cfg = cfg or SolverConfig()
    if g.m == 0:
        x = tuple([1.0 / g.n] * g.n) if g.n else ()
        return LagrangianCertificate(
            x=x, lam=0.0, support_size=0, kkt_residual=0.0,
            iterations_used=0, permutation=tuple(range(1, g.n + 1)))
    best = None
    for idx, x0 in enumerate(_starts(g, cfg)):
        try:
            cand = _solve_from(g, x0, cfg)
        except DegenerateStartError:
            rng = np.random.default_rng([cfg.rng_seed, idx, 1])
            cand = _solve_from(g, rng.dirichlet(np.ones(g.n)), cfg)
        best = cand if best is None else better_certificate(best, cand)
    return best


# ---------------------------------------------------------------------------
# certificate verification
# ---------------------------------------------------------------------------

def _nearest_rational_weighting(arr: np.ndarray, denom: int) -> list[Fraction]:
    """Closest lattice point of the simplex with the given denominator
    (largest-remainder rounding so the entries sum to exactly 1)."""
    scaled = arr * denom
    base = np.floor(scaled).astype(np.int64)
    short = denom - int(base.sum())
    fracs = scaled - base
    # hand the missing units to the largest remainders (ties by index)
    for idx in sorted(range(arr.size), key=lambda v: (-fracs[v], v))[:short]:
        base[idx] += 1
    return [Fraction(int(v), denom) for v in base]


def verify_certificate(g: Hypergraph, cert: LagrangianCertificate,
                       tol: float) -> bool:
    """Recompute the certificate in double precision and re-evaluate the
    weight at the nearest rational weighting (denominator <= 10^6) as a
    drift check. Structural defects raise; numerical mismatches return False.
    """
    if not isinstance(cert, LagrangianCertificate):
        raise InvalidInputError("not a certificate")
    x = np.asarray(cert.x, dtype=float)
    if x.size != g.n or len(cert.permutation) != g.n:
        raise InvalidInputError("certificate length does not match n")
    if sorted(cert.permutation) != list(range(1, g.n + 1)):
        raise InvalidInputError("certificate permutation is not a relabeling")
    if (np.diff(x) > 0).any():
        raise InvalidInputError("certificate weights are not sorted non-increasing")
    if (x < 0).any() or abs(float(x.sum()) - 1.0) > 1e-9:
        raise InvalidInputError("certificate weights are not a legal weighting")

    arr = cert.original_weights(g.n)
    w2 = weight_poly(g, arr)
    if abs(w2 - cert.lam) > tol:
        return False
    if kkt_residual(g, arr, DEFAULT_ZERO_TOL) > tol:
        return False
    if int((arr > DEFAULT_ZERO_TOL).sum()) != cert.support_size:
        return False

    # exact re-evaluation at the rounded rational point; allow for how far
    # the rounding itself can move the weight (first-order sensitivity)
    rat = _nearest_rational_weighting(arr, RATIONAL_DENOM)
    w_rat = Fraction(0)
    for e in g.sorted_edges:
        p = Fraction(1)
        for v in e:
            p *= rat[v - 1]
        w_rat += p
    _, grad = _kernels.partials(g.edge_array, arr, arr.size)
    drift_allowance = 1.01 * float(
        sum(grad[v] * abs(float(rat[v]) - arr[v]) for v in range(arr.size)))
    if abs(float(w_rat) - cert.lam) > tol + drift_allowance + 1e-15:
        return False
    return True


# ---------------------------------------------------------------------------
# local-move machinery
# ---------------------------------------------------------------------------

def swap_improve(g: Hypergraph, cert: LagrangianCertificate,
                 margin: float = 1e-12) -> tuple[Hypergraph, bool]:
    """Exchange a support edge for a support non-edge whose monomial at the
    certificate point is strictly larger (by `margin`). Returns the swapped
    hypergraph and whether a swap happened; a swap strictly increases the
    weight at the certificate point, hence the Lagrangian lower bound."""
    arr = cert.original_weights(g.n)
    sup = sorted(int(v) + 1 for v in np.nonzero(arr > DEFAULT_ZERO_TOL)[0])
    if len(sup) < g.r:
        return g, False

    def monomial(vs) -> float:
        p = 1.0
        for v in vs:
            p *= arr[v - 1]
        return p

    inside = [e for e in g.sorted_edges if all(v in set(sup) for v in e)]
    holes = [f for f in combinations(sup, g.r) if f not in g.edges]
    if not inside or not holes:
        return g, False
    best_f = min(holes, key=lambda f: (-monomial(f), f[::-1]))
    best_e = min(inside, key=lambda e: (monomial(e), e[::-1]))
    if monomial(best_f) <= monomial(best_e) + margin:
        return g, False
    new_edges = (g.edges - {best_e}) | {best_f}
    return Hypergraph(g.r, g.n, frozenset(new_edges)), True


def link_stationarity_report(g: Hypergraph, cert: LagrangianCertificate,
                             cfg: SolverConfig | None = None) -> dict[int, dict]:
    """For each support vertex i, report the link weight at the certificate
    point next to r times the link's own Lagrangian. Observational: at a
    stationary point the link weight equals r times the *graph's* value;
    this report shows how it compares with the link's optimum instead."""
    cfg = cfg or SolverConfig()
    arr = cert.original_weights(g.n)
    out = {}
    for i in sorted(int(v) + 1 for v in np.nonzero(arr > DEFAULT_ZERO_TOL)[0]):
        link_value = solve_lagrangian(link(g, {i}), cfg).lam
        out[i] = {
            "link_weight_at_x": partial(g, arr, i),
            "r_times_graph_value": g.r * cert.lam,
            "r_times_link_lagrangian": g.r * link_value,
        }
    return out


def triage_config(cfg: SolverConfig, restarts: int) -> SolverConfig:
    return replace(cfg, restarts=restarts)
