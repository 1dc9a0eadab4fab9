"""Exhaustive desk-scale computation of the maximum Lagrangian at fixed size.

The search space is the left-compressed r-graphs with m edges on at most
n_cap vertices. Left-compressed edge sets are exactly the downsets of the
coordinatewise dominance order on sorted r-sets, and every colex-sorted
prefix of a downset is again a downset, so the enumerator grows downsets by
appending colex-larger elements whose immediate dominance predecessors
(single-coordinate decrements) are already present. Each downset is reached
along exactly one such path, so the stream is duplicate-free without storing
the family.

Search restricted to left-compressed graphs is lossless for the maximum
(compressions never decrease the Lagrangian); pair coverage is *not* used to
prune and is recorded in the audit instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator

import numpy as np

from .bounds import principal_domain
from .errors import BudgetExceededError, InvalidInputError
from .hypergraph import (Edge, Hypergraph, build_colex, covers_pairs,
                         hypergraph, pair_decomposition)
from .solver import (LagrangianCertificate, SolverConfig, better_certificate,
                     solve_lagrangian, swap_improve, triage_config)
from .weighting import family_weight

DEFAULT_BUDGET = 10 ** 7
TRIAGE_RESTARTS = 8
FINAL_RESTARTS = 64
FINALIST_COUNT = 10
CONJECTURE_TOL = 1e-6
AUDIT_SLACK = 1e-9


@dataclass(frozen=True)
class AuditReport:
    """Structural checks of a winner's certificate against the expected shape
    of extremal optima. Fields needing the principal-domain parameter t are
    None when m sits in a gap.

    x1_bound_ok:  largest weight below 1/(t - r + 1) (+slack).
    xk_bounds_ok: sorted weights obey x_{t-k} > x_1 (k - r + 2)/(k + 1)
                  (-slack) for all k in [t-1].
    pair_identity_max_gap: worst deviation, over support pairs i < j in the
                  original labeling, of (x_i - x_j) * w(pair link) from
                  w(only-i link) -- an identity of true maximizers, reported
                  rather than enforced.
    """

    x_sorted_ok: bool
    x1_bound_ok: bool | None
    xk_bounds_ok: bool | None
    covers_pairs: bool
    pair_identity_max_gap: float
    support_equals_t: bool | None

    def to_dict(self) -> dict:
        return {
            "x_sorted_ok": self.x_sorted_ok,
            "x1_bound_ok": self.x1_bound_ok,
            "xk_bounds_ok": self.xk_bounds_ok,
            "covers_pairs": self.covers_pairs,
            "pair_identity_max_gap": self.pair_identity_max_gap,
            "support_equals_t": self.support_equals_t,
        }


@dataclass(frozen=True)
class SweepRecord:
    """Verdict for one (r, m) cell: the best value over the search space, its
    witness and certificate, the closed-form prediction when applicable, and
    the comparison against the colex hypergraph."""

    r: int
    m: int
    n_cap: int
    lambda_r: float
    witness: Hypergraph
    certificate: LagrangianCertificate
    predicted: float | None
    conjecture_ok: bool
    audit: AuditReport
    colex_lambda: float
    graphs_searched: int
    mode: str = "exhaustive"  # "exhaustive" | "local"

    def to_dict(self) -> dict:
        value_key = "lambda_r" if self.mode == "exhaustive" else "lambda_lower"
        return {
            "r": self.r,
            "m": self.m,
            "n_cap": self.n_cap,
            value_key: self.lambda_r,
            "witness": {"r": self.witness.r, "n": self.witness.n,
                        "edges": [list(e) for e in self.witness.sorted_edges]},
            "certificate": self.certificate.to_dict(),
            "predicted": self.predicted,
            "conjecture_ok": self.conjecture_ok,
            "audit": self.audit.to_dict(),
            "colex_lambda": self.colex_lambda,
            "graphs_searched": self.graphs_searched,
            "mode": self.mode,
        }


# ---------------------------------------------------------------------------
# enumeration of left-compressed graphs
# ---------------------------------------------------------------------------

def _immediate_predecessors(e: Edge) -> list[Edge]:
    """Covers of e from below in dominance order: decrement one coordinate."""
    out = []
    for pos, v in enumerate(e):
        floor = e[pos - 1] if pos else 0
        if v - 1 > floor:
            out.append(e[:pos] + (v - 1,) + e[pos + 1:])
    return out


def default_n_cap(r: int, m: int) -> int:
    """Smallest t with C(t, r) >= m, plus a margin of 2 (validated by the
    n_cap-stability tests: winners' supports do not grow into the margin)."""
    t = r
    while math.comb(t, r) < m:
        t += 1
    return t + 2


def enumerate_left_compressed(r: int, n_cap: int, m: int) -> Iterator[Hypergraph]:
    """Every left-compressed r-graph with m edges on vertex set within
    [n_cap], exactly once, in depth-first colex extension order."""
    if r < 2:
        raise InvalidInputError(f"r={r} must be >= 2")
    if m < 1:
        raise InvalidInputError(f"m={m} must be >= 1")
    if n_cap < r:
        raise InvalidInputError(f"n_cap={n_cap} must be >= r={r}")
    universe = sorted(combinations(range(1, n_cap + 1), r), key=lambda e: e[::-1])
    if m > len(universe):
        return
    index = {e: k for k, e in enumerate(universe)}
    preds = [[index[p] for p in _immediate_predecessors(e)] for e in universe]
    total = len(universe)
    chosen: list[int] = []
    in_set = bytearray(total)

    def grow(last: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == m:
            yield tuple(chosen)
            return
        if total - (last + 1) < m - len(chosen):
            return
        for nxt in range(last + 1, total):
            if all(in_set[p] for p in preds[nxt]):
                chosen.append(nxt)
                in_set[nxt] = 1
                yield from grow(nxt)
                in_set[nxt] = 0
                chosen.pop()

    for picks in grow(-1):
        yield hypergraph(r, [universe[k] for k in picks])


def count_left_compressed(r: int, n_cap: int, m: int) -> int:
    return sum(1 for _ in enumerate_left_compressed(r, n_cap, m))


# ---------------------------------------------------------------------------
# audits
# ---------------------------------------------------------------------------

def audit_extremal(record: "SweepRecord") -> AuditReport:
    """Evaluate every audit field on the record's witness certificate. The
    principal-domain parameter t comes from (r, m); fields that need it are
    None in gap cells. The x1/xk bounds are guaranteed for extremal optima
    only when the support has exactly t vertices; they are evaluated
    unconditionally here as an observational check (support_equals_t says
    whether that hypothesis held).
    """
    cert = record.certificate
    g = record.witness
    info = principal_domain(record.r, record.m)
    x = list(cert.x)
    x_orig = cert.original_weights(g.n)
    r = record.r

    x_sorted_ok = all(x_orig[k] >= x_orig[k + 1] - AUDIT_SLACK
                      for k in range(len(x_orig) - 1))

    if info.t is None:
        x1_ok = None
        xk_ok = None
        support_equals_t = None
    else:
        t = info.t

        def coord(idx: int) -> float:  # 1-based, 0 beyond the recorded length
            return x[idx - 1] if 1 <= idx <= len(x) else 0.0

        x1 = coord(1)
        x1_ok = x1 < 1.0 / (t - r + 1) + AUDIT_SLACK
        xk_ok = all(
            coord(t - k) > (k - r + 2) / (k + 1) * x1 - AUDIT_SLACK
            for k in range(1, t))
        support_equals_t = cert.support_size == t

    sup = sorted(int(v) + 1 for v in np.nonzero(
        x_orig > 1e-12)[0])
    gap = 0.0
    for i, j in combinations(sup, 2):
        dec = pair_decomposition(g, i, j)
        lhs = (x_orig[i - 1] - x_orig[j - 1]) * family_weight(dec.common, x_orig)
        rhs = family_weight(dec.only_i, x_orig)
        gap = max(gap, abs(lhs - rhs))

    return AuditReport(
        x_sorted_ok=bool(x_sorted_ok),
        x1_bound_ok=x1_ok,
        xk_bounds_ok=xk_ok,
        covers_pairs=covers_pairs(g),
        pair_identity_max_gap=gap,
        support_equals_t=support_equals_t,
    )


# ---------------------------------------------------------------------------
# exhaustive and local search
# ---------------------------------------------------------------------------

def _finish_record(r, m, n_cap, winner_g, winner_cert, searched, cfg, mode):
    colex_g = build_colex(r, m)
    colex_cert = solve_lagrangian(colex_g, triage_config(cfg, FINAL_RESTARTS))
    info = principal_domain(r, m)
    record = SweepRecord(
        r=r, m=m, n_cap=n_cap,
        lambda_r=winner_cert.lam,
        witness=winner_g,
        certificate=winner_cert,
        predicted=info.predicted_lambda,
        conjecture_ok=winner_cert.lam <= colex_cert.lam + CONJECTURE_TOL,
        audit=AuditReport(True, None, None, False, 0.0, None),  # placeholder
        colex_lambda=colex_cert.lam,
        graphs_searched=searched,
        mode=mode,
    )
    return replace(record, audit=audit_extremal(record))


def brute_lambda(r: int, m: int, n_cap: int | None = None,
                 cfg: SolverConfig | None = None,
                 budget: int = DEFAULT_BUDGET) -> SweepRecord:
    """Maximum Lagrangian over all left-compressed r-graphs with m edges on
    at most n_cap vertices, with witness, certificate and audit.

    Every enumerated graph is solved with a cheap triage schedule; the ten
    best candidates are re-solved with the heavy restart schedule and the
    winner reduced under the solver's deterministic tie-breaking (earlier
    enumeration order wins full payload ties). Aborts with a partial-result
    error if the enumeration exceeds `budget` graphs.
    """
    cfg = cfg or SolverConfig()
    if n_cap is None:
        n_cap = default_n_cap(r, m)
    tri_cfg = triage_config(cfg, TRIAGE_RESTARTS)
    fin_cfg = triage_config(cfg, FINAL_RESTARTS)

    finalists: list[tuple[float, int, Hypergraph]] = []  # (lam, order, graph)
    searched = 0
    for g in enumerate_left_compressed(r, n_cap, m):
        if searched >= budget:
            best_partial = None
            if finalists:
                lam, order, gbest = max(finalists, key=lambda t: (t[0], -t[1]))
                best_partial = {"lambda_lower": lam, "graphs_searched": searched}
            raise BudgetExceededError(
                f"enumeration budget of {budget} graphs exceeded at "
                f"(r={r}, m={m}, n_cap={n_cap})",
                r=r, m=m, n_cap=n_cap, budget=budget,
                graphs_enumerated=searched, best_partial=best_partial)
        cert = solve_lagrangian(g, tri_cfg)
        finalists.append((cert.lam, searched, g))
        if len(finalists) > 4 * FINALIST_COUNT:
            finalists.sort(key=lambda t: (-t[0], t[1]))
            del finalists[FINALIST_COUNT:]
        searched += 1
    if searched == 0:
        raise InvalidInputError(
            f"no left-compressed graph with m={m} edges fits on n_cap={n_cap}")

    finalists.sort(key=lambda t: (-t[0], t[1]))
    best_g = None
    best_cert = None
    for _, order, g in finalists[:FINALIST_COUNT]:
        cert = solve_lagrangian(g, fin_cfg)
        if best_cert is None or better_certificate(best_cert, cert) is cert:
            best_g, best_cert = g, cert
    return _finish_record(r, m, n_cap, best_g, best_cert, searched, cfg,
                          "exhaustive")


def local_search(r: int, m: int, n_cap: int | None = None,
                 cfg: SolverConfig | None = None,
                 max_moves: int = 1000) -> SweepRecord:
    """Hill-climb from the colex hypergraph by edge/non-edge swaps inside the
    certificate support. Each accepted swap strictly increases the value, so
    the climb terminates; the result is a lower-bound record, not a search of
    the whole space (serialized under "lambda_lower")."""
    cfg = cfg or SolverConfig()
    g = build_colex(r, m)
    if n_cap is None:
        n_cap = max(default_n_cap(r, m), g.n)
    if g.n > n_cap:
        raise InvalidInputError(
            f"colex start needs {g.n} vertices, above n_cap={n_cap}")
    fin_cfg = triage_config(cfg, FINAL_RESTARTS)
    cert = solve_lagrangian(g, fin_cfg)
    moves = 0
    while moves < max_moves:
        nxt, improved = swap_improve(g, cert)
        if not improved:
            break
        g = nxt
        cert = solve_lagrangian(g, fin_cfg)
        moves += 1
    return _finish_record(r, m, n_cap, g, cert, moves, cfg, "local")
