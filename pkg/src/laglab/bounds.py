"""Closed-form predictions and bounds for the maximum Lagrangian at fixed m.

Principal domain: integers m with C(t-1, r) <= m <= C(t, r) - C(t-2, r-2)
for some t; on that interval the colex hypergraph's Lagrangian is constant,
C(t-1, r) / (t-1)^r. The graph case (r = 2) is fully resolved by the
Motzkin-Straus clique formula. For every (r, m) there is also the smooth
upper bound m * s^{-r}, where s >= r-1 solves C(s, r) = m in the
falling-factorial sense; equality holds exactly at integer s (complete
hypergraphs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import count

from .errors import InvalidInputError
from .hypergraph import Hypergraph

BISECT_TOL = 1e-12
INTEGER_SNAP_TOL = 1e-9
MAX_CLIQUE_VERTICES = 24


@dataclass(frozen=True)
class PrincipalDomainInfo:
    r: int
    m: int
    t: int | None
    predicted_lambda: float | None
    is_critical: bool
    is_principal_case: bool


def principal_domain(r: int, m: int) -> PrincipalDomainInfo:
    """Locate m's principal domain, if any: the unique t with
    C(t-1, r) <= m <= C(t, r) - C(t-2, r-2). Outside every such interval
    (the gaps) t is None. The critical case is the right endpoint; the
    principal case m = C(t-1, r) is the left endpoint, where the colex
    hypergraph is complete."""
    if r < 2:
        raise InvalidInputError(f"r={r} must be >= 2")
    if m < 1:
        raise InvalidInputError(f"m={m} must be >= 1")
    for t in count(2):
        lower = math.comb(t - 1, r)
        if lower > m:
            break
        upper = math.comb(t, r) - math.comb(t - 2, r - 2)
        if lower <= m <= upper:
            return PrincipalDomainInfo(
                r=r, m=m, t=t,
                predicted_lambda=predicted_lambda(r, t),
                is_critical=(m == upper),
                is_principal_case=(m == lower),
            )
    return PrincipalDomainInfo(r=r, m=m, t=None, predicted_lambda=None,
                               is_critical=False, is_principal_case=False)


def predicted_lambda(r: int, t: int) -> float:
    """C(t-1, r) / (t-1)^r: the Lagrangian of the complete hypergraph on
    t-1 vertices, the constant value across the principal domain of t."""
    if t <= r:
        raise InvalidInputError(f"predicted_lambda needs t > r, got t={t}, r={r}")
    return math.comb(t - 1, r) / (t - 1) ** r


def lambda2(m: int) -> float:
    """Exact maximum Lagrangian over graphs with m edges: with t the unique
    integer satisfying C(t-1, 2) <= m < C(t, 2), the value is
    (1 - 1/(t-1)) / 2 (clique on t-1 vertices)."""
    if m < 1:
        raise InvalidInputError(f"m={m} must be >= 1")
    for t in count(2):
        if math.comb(t - 1, 2) <= m < math.comb(t, 2):
            return 0.5 * (1.0 - 1.0 / (t - 1))
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Motzkin-Straus (graphs): Lagrangian from the exact clique number
# ---------------------------------------------------------------------------

def max_clique_size(g: Hypergraph) -> int:
    """Exact clique number by bitset branch-and-bound (n <= 24)."""
    if g.r != 2:
        raise InvalidInputError(f"clique search needs a 2-graph, got r={g.r}")
    if g.n > MAX_CLIQUE_VERTICES:
        raise InvalidInputError(f"clique search capped at n={MAX_CLIQUE_VERTICES}")
    n = g.n
    if n == 0:
        return 0
    adj = [0] * n
    for a, b in g.edges:
        adj[a - 1] |= 1 << (b - 1)
        adj[b - 1] |= 1 << (a - 1)
    best = 1

    def expand(size: int, cand: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            if size + 1 > best:
                best = size + 1
            expand(size + 1, cand & adj[v])

    expand(0, (1 << n) - 1)
    return best


def motzkin_straus(g: Hypergraph) -> float:
    """Lagrangian of a graph from its clique number: (1 - 1/omega) / 2."""
    omega = max_clique_size(g)
    if omega == 0:
        omega = 1
    return 0.5 * (1.0 - 1.0 / omega)


# ---------------------------------------------------------------------------
# smooth upper bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmoothBound:
    s: float
    bound: float
    equality: bool  # s is an integer: the bound is attained (complete graph)


def _falling_binom(s: float, r: int) -> float:
    """Generalized binomial via the falling factorial s(s-1)...(s-r+1)/r!
    (no gamma evaluation, exact at integers)."""
    p = 1.0
    for k in range(r):
        p *= s - k
    return p / math.factorial(r)


def smooth_bound(r: int, m: int) -> SmoothBound:
    """Solve C(s, r) = m for the real s >= r-1 by bisection (|ds| <= 1e-12)
    and return the upper bound m * s^{-r}. When s lands on an integer
    (within 1e-9) with C(s, r) = m exactly, s is snapped and the equality
    case is flagged."""
    if r < 2:
        raise InvalidInputError(f"r={r} must be >= 2")
    if m < 1:
        raise InvalidInputError(f"m={m} must be >= 1")
    lo, hi = float(r - 1), float(r + m)  # product at r+m exceeds r! * m
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if _falling_binom(mid, r) < m:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    nearest = round(s)
    equality = abs(s - nearest) <= INTEGER_SNAP_TOL and math.comb(int(nearest), r) == m
    if equality:
        s = float(nearest)
    return SmoothBound(s=s, bound=m * s ** (-r), equality=equality)
