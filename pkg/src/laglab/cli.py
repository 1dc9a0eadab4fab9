"""Command-line interface.

Subcommands
    lambda         solve one hypergraph file, certificate JSON on stdout
    colex          write the colex hypergraph C(r, m)
    sweep          exhaustive per-m records (JSON-lines + CSV summary)
    bound          principal-domain prediction and smooth bound for (r, m)
    verify-lemmas  run the randomized property suites

Exit codes: 0 ok, 2 parse error, 3 degenerate solver start, 4 search budget
exceeded, 5 property-suite failure. All randomness flows from --seed
(LAGLAB_SEED is honored when the flag is absent); every output embeds a run
manifest, and timestamps are the only non-reproducible bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import principal_domain, smooth_bound
from .errors import (BudgetExceededError, DegenerateStartError,
                     InvalidInputError, ParseError, PreconditionError)
from .hypergraph import build_colex, load_hypergraph, to_json_dict
from .jsonutil import dumps
from .oracle import DEFAULT_BUDGET, brute_lambda
from .properties import SUITES, run_suites
from .solver import SolverConfig, solve_lagrangian

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4
EXIT_PROPERTY = 5


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LAGLAB_SEED")
    if env is not None:
        return int(env)
    return 0


def _manifest(command: str, params: dict, seed: int) -> dict:
    return {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "rng_seed": seed,
        "started_at": _now(),
        "finished_at": None,
    }


def _finish(manifest: dict) -> dict:
    manifest["finished_at"] = _now()
    return manifest


def _solver_config(args, seed: int) -> SolverConfig:
    return SolverConfig(restarts=args.restarts, max_iters=args.max_iters,
                        conv_tol=args.tol, rng_seed=seed)


def _add_solver_flags(p: argparse.ArgumentParser):
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=1e-12,
                   help="convergence tolerance on weight improvement")


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_lambda(args) -> int:
    seed = _resolve_seed(args)
    manifest = _manifest("lambda", {"input": str(args.input),
                                    "restarts": args.restarts,
                                    "max_iters": args.max_iters,
                                    "tol": args.tol}, seed)
    g = load_hypergraph(args.input)
    cert = solve_lagrangian(g, _solver_config(args, seed))
    payload = cert.to_dict()
    payload["manifest"] = _finish(manifest)
    _write_or_print(dumps(payload, indent=2), args.out)
    return EXIT_OK


def cmd_colex(args) -> int:
    seed = _resolve_seed(args)
    manifest = _manifest("colex", {"r": args.r, "m": args.m}, seed)
    g = build_colex(args.r, args.m)
    payload = to_json_dict(g)
    payload["manifest"] = _finish(manifest)
    _write_or_print(dumps(payload, indent=2), args.out)
    return EXIT_OK


def cmd_bound(args) -> int:
    seed = _resolve_seed(args)
    manifest = _manifest("bound", {"r": args.r, "m": args.m}, seed)
    info = principal_domain(args.r, args.m)
    sm = smooth_bound(args.r, args.m)
    payload = {
        "r": args.r,
        "m": args.m,
        "principal_domain": {
            "t": info.t,
            "predicted_lambda": info.predicted_lambda,
            "is_critical": info.is_critical,
            "is_principal_case": info.is_principal_case,
        },
        "smooth_bound": {"s": sm.s, "bound": sm.bound, "equality": sm.equality},
        "manifest": _finish(manifest),
    }
    _write_or_print(dumps(payload, indent=2), args.out)
    return EXIT_OK


def _sweep_cell(task):
    r, m, n_cap, budget, cfg_fields = task
    cfg = SolverConfig(**cfg_fields)
    try:
        record = brute_lambda(r, m, n_cap=n_cap, cfg=cfg, budget=budget)
        return m, "ok", record.to_dict()
    except BudgetExceededError as exc:
        return m, "budget", {
            "r": r, "m": m, "n_cap": exc.n_cap, "error": "budget_exceeded",
            "budget": exc.budget, "graphs_enumerated": exc.graphs_enumerated,
            "best_partial": exc.best_partial,
        }


_CSV_FIELDS = ["r", "m", "t", "predicted", "lambda_r", "conjecture_ok",
               "covers_pairs", "x_sorted_ok", "x1_bound_ok", "xk_bounds_ok",
               "support_equals_t", "pair_identity_max_gap"]


def _csv_cell(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def cmd_sweep(args) -> int:
    seed = _resolve_seed(args)
    if args.m_min < 1 or args.m_max < args.m_min:
        raise InvalidInputError(f"invalid m range [{args.m_min}, {args.m_max}]")
    if args.n_cap is not None and math.comb(args.n_cap, args.r) < args.m_max:
        raise InvalidInputError(
            f"n_cap={args.n_cap} admits only {math.comb(args.n_cap, args.r)} "
            f"edges, below m_max={args.m_max}")
    manifest = _manifest("sweep", {
        "r": args.r, "m_min": args.m_min, "m_max": args.m_max,
        "n_cap": args.n_cap, "jobs": args.jobs, "budget": args.budget,
        "restarts": args.restarts, "max_iters": args.max_iters,
        "tol": args.tol}, seed)
    cfg = _solver_config(args, seed)
    cfg_fields = {"restarts": cfg.restarts, "max_iters": cfg.max_iters,
                  "conv_tol": cfg.conv_tol, "zero_tol": cfg.zero_tol,
                  "rng_seed": cfg.rng_seed}
    tasks = [(args.r, m, args.n_cap, args.budget, cfg_fields)
             for m in range(args.m_min, args.m_max + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            raw = list(pool.map(_sweep_cell, tasks))
    else:
        raw = [_sweep_cell(t) for t in tasks]
    results = {m: (status, payload) for m, status, payload in raw}

    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    _finish(manifest)

    jsonl_path = out_dir / f"sweep_r{args.r}.jsonl"
    with open(jsonl_path, "w", encoding="utf-8") as fh:
        fh.write(dumps({"manifest": manifest}) + "\n")
        for m in sorted(results):
            fh.write(dumps(results[m][1]) + "\n")

    csv_path = out_dir / f"sweep_r{args.r}.csv"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for m in sorted(results):
        status, payload = results[m]
        if status != "ok":
            continue
        audit = payload["audit"]
        info = principal_domain(args.r, m)
        writer.writerow([_csv_cell(v) for v in [
            args.r, m, info.t, payload["predicted"], payload["lambda_r"],
            payload["conjecture_ok"], audit["covers_pairs"],
            audit["x_sorted_ok"], audit["x1_bound_ok"],
            audit["xk_bounds_ok"], audit["support_equals_t"],
            audit["pair_identity_max_gap"]]])
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write("#manifest=" + dumps(manifest) + "\n")
        fh.write(buf.getvalue())

    incomplete = [m for m, (status, _) in results.items() if status != "ok"]
    for m in sorted(incomplete):
        print(f"warning: cell m={m} exceeded the enumeration budget",
              file=sys.stderr)
    print(f"wrote {jsonl_path} and {csv_path}")
    return EXIT_BUDGET if incomplete else EXIT_OK


def cmd_verify_lemmas(args) -> int:
    seed = _resolve_seed(args)
    manifest = _manifest("verify-lemmas", {
        "trials": args.trials, "inject_fault": args.inject_fault,
        "restarts": args.restarts, "max_iters": args.max_iters,
        "tol": args.tol}, seed)
    cfg = _solver_config(args, seed)
    results, violations = run_suites(args.trials, seed, cfg,
                                     inject_fault=args.inject_fault)
    for name, status in results.items():
        print(f"suite {name}: {status}")
    if not violations:
        return EXIT_OK
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for v in violations:
        # dump doubles as a valid `lambda` input: hypergraph keys at top level
        payload = to_json_dict(v.graph)
        payload["weighting"] = v.weighting
        payload["suite"] = v.suite
        payload["detail"] = v.detail
        payload["manifest"] = _finish(dict(manifest))
        path = out_dir / f"counterexample_{v.suite}.json"
        path.write_text(dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"suite {v.suite}: counterexample written to {path}",
              file=sys.stderr)
        print(f"  {v.detail}", file=sys.stderr)
    return EXIT_PROPERTY


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laglab",
        description="Hypergraph Lagrangians: solve, bound, and sweep.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="solve a hypergraph file")
    p.add_argument("input", help="hypergraph JSON file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_lambda)

    p = sub.add_parser("colex", help="write the colex hypergraph C(r, m)")
    p.add_argument("r", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_colex)

    p = sub.add_parser("bound", help="closed-form bounds for (r, m)")
    p.add_argument("r", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("sweep", help="exhaustive search per edge count")
    p.add_argument("r", type=int)
    p.add_argument("m_min", type=int)
    p.add_argument("m_max", type=int)
    p.add_argument("--n-cap", type=int, default=None,
                   help="vertex budget (default: per-cell minimum + 2)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="abort a cell after this many enumerated graphs")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="output directory")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify-lemmas", help="run the randomized property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="counterexample dump directory")
    p.add_argument("--inject-fault", choices=sorted(SUITES), default=None,
                   help="testing only: force the named suite to report a "
                        "counterexample")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_verify_lemmas)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateStartError as exc:
        print(f"error: solver degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
