#!/usr/bin/env python3
"""Benchmark the compiled ascent kernel against the pure-numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--restarts N] [--iters N]

Runs the growth transform from identical seeded starts through both
implementations, checks they agree, and reports per-backend timings. The
compiled kernel is what makes the exhaustive sweeps interactive; this shows
by how much.
"""

import argparse
import time

import numpy as np

import laglab as L
from laglab._kernels import _pycore

try:
    from laglab._kernels import _core
except ImportError:
    _core = None


def bench_case(name, g, restarts, iters):
    edges = g.edge_array
    rng = np.random.default_rng(12345)
    starts = [rng.dirichlet(np.ones(g.n)) for _ in range(restarts)]

    rows = []
    results = {}
    backends = [("python", _pycore)] + ([("cython", _core)] if _core else [])
    for label, mod in backends:
        t0 = time.perf_counter()
        total_steps = 0
        vals = []
        for x0 in starts:
            x = x0.copy()
            steps, w, _ = mod.ascend(edges, x, iters, 1e-12, 1e-10, 1e-10)
            total_steps += steps
            vals.append(w)
        dt = time.perf_counter() - t0
        results[label] = vals
        rows.append((label, dt, total_steps))

    print(f"\n{name}  (n={g.n}, m={g.m}, r={g.r})")
    base = None
    for label, dt, steps in rows:
        per_step = dt / steps * 1e6 if steps else float("nan")
        speed = "" if base is None else f"  speedup x{base / dt:.1f}"
        if base is None:
            base = dt
        print(f"  {label:>7}: {dt:8.3f}s  {steps:8d} steps  "
              f"{per_step:8.2f} us/step{speed}")

    if _core:
        diffs = [abs(a - b) for a, b in zip(results["python"], results["cython"])]
        worst = max(diffs)
        print(f"  agreement: max |value difference| = {worst:.2e}")
        assert worst <= 1e-9, "backends disagree"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--restarts", type=int, default=40)
    ap.add_argument("--iters", type=int, default=20_000)
    args = ap.parse_args()

    if _core is None:
        print("compiled kernel not available; timing the fallback only")
    cases = [
        ("complete 3-graph on 10 vertices", L.complete(3, 10)),
        ("complete 5-graph on 10 vertices", L.complete(5, 10)),
        ("colex 3-graph, m=50", L.build_colex(3, 50)),
        ("colex 4-graph, m=30", L.build_colex(4, 30)),
    ]
    for name, g in cases:
        bench_case(name, g, args.restarts, args.iters)


if __name__ == "__main__":
    main()
