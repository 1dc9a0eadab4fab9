"""Immutable r-uniform hypergraphs on [n] and their combinatorial operations.

Vertices are 1-based throughout. An edge is a strictly increasing tuple of
vertices of length r. Hypergraphs are value objects: equality is (r, n,
edge-set) equality with the labeling taken literally (no isomorphism
canonicalization).

Colexicographic order: A < B iff max(A symmetric-difference B) lies in B.
`build_colex(r, m)` returns the hypergraph of the m colex-smallest r-sets,
the conjectured maximizer of the Lagrangian at fixed edge count.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import InvalidInputError, ParseError, PreconditionError

Edge = tuple[int, ...]


def _check_edge(e, r: int | None = None) -> Edge:
    e = tuple(int(v) for v in e)
    if r is not None and len(e) != r:
        raise InvalidInputError(f"edge {e} has length {len(e)}, expected {r}")
    if not e:
        raise InvalidInputError("empty edge")
    if e[0] < 1:
        raise InvalidInputError(f"edge {e} has a vertex < 1")
    if any(a >= b for a, b in zip(e, e[1:])):
        raise InvalidInputError(f"edge {e} is not strictly increasing")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph with vertex set [n] and an immutable edge set."""

    r: int
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputError(f"uniformity r={self.r} must be >= 1")
        if self.n < 0:
            raise InvalidInputError(f"vertex count n={self.n} must be >= 0")
        edges = frozenset(_check_edge(e, self.r) for e in self.edges)
        for e in edges:
            if e[-1] > self.n:
                raise InvalidInputError(f"edge {e} exceeds vertex range [1, {self.n}]")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in colexicographic order (deterministic iteration/serialization)."""
        return tuple(sorted(self.edges, key=lambda e: e[::-1]))

    @cached_property
    def edge_array(self) -> np.ndarray:
        """0-based (m, r) int64 array of the colex-sorted edges, for the kernels."""
        if not self.edges:
            return np.zeros((0, self.r), dtype=np.int64)
        return np.array(self.sorted_edges, dtype=np.int64) - 1

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={self.n}, m={self.m})"


def hypergraph(r: int, edges: Iterable[Iterable[int]], n: int | None = None) -> Hypergraph:
    """Build a hypergraph from edge lists; n defaults to the largest vertex."""
    es = frozenset(_check_edge(e, r) for e in edges)
    if n is None:
        n = max((e[-1] for e in es), default=0)
    return Hypergraph(r, n, es)


# ---------------------------------------------------------------------------
# colexicographic order
# ---------------------------------------------------------------------------

def colex_compare(a: Iterable[int], b: Iterable[int]) -> int:
    """-1, 0 or 1 as a <, =, > b in colex order (max of the symmetric
    difference decides; equivalently lex order on reversed sorted tuples)."""
    a = _check_edge(a)
    b = _check_edge(b)
    if len(a) != len(b):
        raise InvalidInputError(f"colex_compare: lengths differ ({len(a)} vs {len(b)})")
    ra, rb = a[::-1], b[::-1]
    return (ra > rb) - (ra < rb)


def colex_rank(e: Iterable[int]) -> int:
    """1-based position of e among all len(e)-subsets of the positive
    integers in colex order (combinatorial number system)."""
    e = _check_edge(e)
    return 1 + sum(math.comb(v - 1, i + 1) for i, v in enumerate(e))


def colex_unrank(r: int, k: int) -> Edge:
    """Inverse of colex_rank: the k-th (1-based) r-set in colex order."""
    if r < 1:
        raise InvalidInputError(f"r={r} must be >= 1")
    if k < 1:
        raise InvalidInputError(f"rank k={k} must be >= 1")
    rem = k - 1
    out = [0] * r
    hi = None  # exclusive upper bound for the next coordinate - 1
    for i in range(r, 0, -1):
        # largest c with comb(c, i) <= rem, via doubling + bisection
        if hi is None:
            h = i
            while math.comb(h, i) <= rem:
                h *= 2
        else:
            h = hi
        lo = i - 1
        while lo + 1 < h:
            mid = (lo + h) // 2
            if math.comb(mid, i) <= rem:
                lo = mid
            else:
                h = mid
        rem -= math.comb(lo, i)
        out[i - 1] = lo + 1
        hi = lo
    return tuple(out)


def build_colex(r: int, m: int) -> Hypergraph:
    """The hypergraph of the m colex-smallest r-sets, on n = largest vertex used."""
    if r < 2:
        raise InvalidInputError(f"r={r} must be >= 2")
    if m < 1:
        raise InvalidInputError(f"m={m} must be >= 1")
    edges = [colex_unrank(r, k) for k in range(1, m + 1)]
    return hypergraph(r, edges)


def complete(r: int, t: int) -> Hypergraph:
    """The complete r-uniform hypergraph on [t]."""
    if r < 2:
        raise InvalidInputError(f"r={r} must be >= 2")
    if t < r:
        raise InvalidInputError(f"complete({r}, {t}) needs t >= r")
    return Hypergraph(r, t, frozenset(combinations(range(1, t + 1), r)))


# ---------------------------------------------------------------------------
# links, pair decomposition, coverage
# ---------------------------------------------------------------------------

def link(g: Hypergraph, s: Iterable[int]) -> Hypergraph:
    """Link hypergraph of the vertex set s: the (r-|s|)-sets f with f ∪ s an
    edge and f disjoint from s. The ambient vertex set [n] is kept."""
    s = frozenset(int(v) for v in s)
    if len(s) >= g.r:
        raise InvalidInputError(f"link set of size {len(s)} not below r={g.r}")
    if any(v < 1 or v > g.n for v in s):
        raise InvalidInputError(f"link set {sorted(s)} not inside [1, {g.n}]")
    edges = frozenset(tuple(v for v in e if v not in s)
                      for e in g.edges if s <= set(e))
    return Hypergraph(g.r - len(s), g.n, edges)


@dataclass(frozen=True)
class PairLinkDecomposition:
    """Edge classes around an ordered vertex pair (i, j).

    common: (r-2)-sets f with f ∪ {i,j} an edge (the link of the pair).
    only_i: (r-1)-sets f avoiding j with f ∪ {i} an edge but f ∪ {j} not.
    cross:  (r-1)-sets f (avoiding i and j) with f ∪ {j} an edge but
            f ∪ {i} a non-edge.
    """

    common: frozenset[Edge]
    only_i: frozenset[Edge]
    cross: frozenset[Edge]


def pair_decomposition(g: Hypergraph, i: int, j: int) -> PairLinkDecomposition:
    if i == j:
        raise InvalidInputError(f"pair decomposition needs i != j, got ({i}, {j})")
    for v in (i, j):
        if not 1 <= v <= g.n:
            raise InvalidInputError(f"vertex {v} not in [1, {g.n}]")
    common = set()
    e_i, e_j = set(), set()
    for e in g.edges:
        has_i, has_j = i in e, j in e
        if has_i and has_j:
            common.add(tuple(v for v in e if v not in (i, j)))
        if has_i and not has_j:
            e_i.add(tuple(v for v in e if v != i))
        if has_j and not has_i:
            e_j.add(tuple(v for v in e if v != j))
    only_i = frozenset(f for f in e_i if f not in e_j)
    cross = frozenset(f for f in e_j if f not in e_i)
    return PairLinkDecomposition(frozenset(common), only_i, cross)


def covers_pair(g: Hypergraph, i: int, j: int) -> bool:
    """True iff some edge contains both i and j."""
    if i == j:
        raise InvalidInputError("covers_pair needs two distinct vertices")
    return any(i in e and j in e for e in g.edges)


def covers_pairs(g: Hypergraph) -> bool:
    """True iff every vertex pair of [n] lies in some edge."""
    if g.n < 2:
        return True
    covered = {p for e in g.edges for p in combinations(e, 2)}
    return len(covered) == math.comb(g.n, 2)


def uncovered_pairs(g: Hypergraph) -> list[tuple[int, int]]:
    covered = {p for e in g.edges for p in combinations(e, 2)}
    return [p for p in combinations(range(1, g.n + 1), 2) if p not in covered]


# ---------------------------------------------------------------------------
# compression (shifting)
# ---------------------------------------------------------------------------

def _shift(e: Edge, i: int, j: int) -> Edge:
    # replace j by i when i is absent and j present; otherwise identity
    if i in e or j not in e:
        return e
    return tuple(sorted([v for v in e if v != j] + [i]))


def compress(g: Hypergraph, i: int, j: int) -> Hypergraph:
    """Apply the (i, j) compression: each edge through j (and not i) moves to
    its shifted copy unless that copy is already present. Edge count is
    preserved."""
    if i >= j:
        raise InvalidInputError(f"compress needs i < j, got ({i}, {j})")
    new_edges = set()
    for e in g.edges:
        le = _shift(e, i, j)
        if le == e or le in g.edges:
            new_edges.add(e)
        else:
            new_edges.add(le)
    return Hypergraph(g.r, g.n, frozenset(new_edges))


def is_left_compressed(g: Hypergraph) -> bool:
    """True iff every compression fixes g; equivalently the sorted edges form
    a downset under coordinatewise dominance (every single-vertex decrease of
    an edge is again an edge)."""
    for e in g.edges:
        others = set(e)
        for pos, v in enumerate(e):
            lower = e[pos - 1] if pos else 0
            for u in range(lower + 1, v):
                if u in others:
                    continue
                if e[:pos] + (u,) + e[pos + 1:] not in g.edges:
                    return False
    return True


def left_compress_closure(g: Hypergraph) -> Hypergraph:
    """Iterate compressions in lexicographic (i, j) sweeps to a fixpoint."""
    cur = g
    while True:
        nxt = cur
        for i in range(1, cur.n):
            for j in range(i + 1, cur.n + 1):
                nxt = compress(nxt, i, j)
        if nxt.edges == cur.edges:
            return nxt
        cur = nxt


# ---------------------------------------------------------------------------
# gluing and deletion
# ---------------------------------------------------------------------------

def glue(g: Hypergraph, i: int, j: int) -> Hypergraph:
    """Identify the uncovered pair {i, j} into one fat vertex.

    The fat vertex takes the smallest freed label (min(i, j)) and the result
    is relabeled onto [n-1]. The new edge set is: edges avoiding both i and
    j, plus f ∪ {fat} for f in the union of the two links. Edge count drops
    by |link(i) ∩ link(j)|.
    """
    if i == j or not (1 <= i <= g.n and 1 <= j <= g.n):
        raise InvalidInputError(f"glue needs two distinct vertices in [1, {g.n}]")
    if covers_pair(g, i, j):
        raise PreconditionError(f"pair ({i}, {j}) is covered; gluing undefined")
    i, j = min(i, j), max(i, j)

    def relabel(v: int) -> int:
        return v - 1 if v > j else v

    fat = i
    new_edges = set()
    merged_links = set()
    for e in g.edges:
        if i in e:
            merged_links.add(tuple(v for v in e if v != i))
        elif j in e:
            merged_links.add(tuple(v for v in e if v != j))
        else:
            new_edges.add(tuple(relabel(v) for v in e))
    for f in merged_links:
        new_edges.add(tuple(sorted([relabel(v) for v in f] + [fat])))
    return Hypergraph(g.r, g.n - 1, frozenset(new_edges))


def delete_vertex(g: Hypergraph, i: int) -> Hypergraph:
    """Remove vertex i and its incident edges; relabel [n] \\ {i} onto [n-1]."""
    if not 1 <= i <= g.n:
        raise InvalidInputError(f"vertex {i} not in [1, {g.n}]")
    edges = frozenset(tuple(v - 1 if v > i else v for v in e)
                      for e in g.edges if i not in e)
    return Hypergraph(g.r, g.n - 1, edges)


# ---------------------------------------------------------------------------
# JSON file format
# ---------------------------------------------------------------------------

def to_json_dict(g: Hypergraph) -> dict:
    return {"r": g.r, "n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def _edge_start_lines(text: str) -> list[int]:
    """1-based line number of each element of the top-level "edges" array.

    A small scanner (string- and nesting-aware) so parse errors can point at
    the offending edge even in pretty-printed files.
    """
    key = text.find('"edges"')
    if key < 0:
        return []
    start = text.find("[", key)
    if start < 0:
        return []
    lines: list[int] = []
    line = text.count("\n", 0, start) + 1
    depth = 0
    in_string = False
    escaped = False
    for ch in text[start:]:
        if ch == "\n":
            line += 1
            continue
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
            continue
        if ch == '"':
            in_string = True
        elif ch == "[":
            depth += 1
            if depth == 2:
                lines.append(line)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return lines


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the JSON file format {"r": ..., "n": ..., "edges": [[...], ...]}.

    Rejects duplicate edges, wrong-length edges, unsorted or out-of-range
    vertices, each with the line the edge starts on. Unknown top-level keys
    (e.g. an embedded run manifest) are ignored.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object", line=1)
    for field in ("r", "n", "edges"):
        if field not in data:
            raise ParseError(f'missing required key "{field}"', line=1)
    r, n = data["r"], data["n"]
    if not isinstance(r, int) or r < 1:
        raise ParseError(f'"r" must be an integer >= 1, got {r!r}', line=1)
    if not isinstance(n, int) or n < 0:
        raise ParseError(f'"n" must be an integer >= 0, got {n!r}', line=1)
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be an array', line=1)

    lines = _edge_start_lines(text)

    def edge_line(idx: int) -> int | None:
        return lines[idx] if idx < len(lines) else None

    seen: set[Edge] = set()
    edges: list[Edge] = []
    for idx, raw in enumerate(raw_edges):
        ln = edge_line(idx)
        if not isinstance(raw, list) or not all(isinstance(v, int) for v in raw):
            raise ParseError(f"edge #{idx + 1} must be an array of integers", line=ln)
        if len(raw) != r:
            raise ParseError(f"edge {raw} has length {len(raw)}, expected r={r}", line=ln)
        if any(a >= b for a, b in zip(raw, raw[1:])):
            raise ParseError(
                f"edge {raw} must be strictly increasing (no repeats)", line=ln)
        if raw[0] < 1 or raw[-1] > n:
            raise ParseError(f"edge {raw} has vertices outside [1, {n}]", line=ln)
        e = tuple(raw)
        if e in seen:
            raise ParseError(f"duplicate edge {raw}", line=ln)
        seen.add(e)
        edges.append(e)
    return Hypergraph(r, n, frozenset(edges))


def load_hypergraph(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())
