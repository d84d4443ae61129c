"""Command-line front end: gen | color | verify | bench.

Exit codes: 0 success / coloring verified, 1 algorithmic failure or
verification violation, 2 bad input (unreadable files, malformed
arguments, out-of-regime graphs without --force).

When no --seed is given, the NEARVIZ_SEED environment variable is used
as a fallback before the default of 0.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

import numpy as np

from .coloring import RunConfig, edge_color, resolve_params
from .genio import ParseError, gen_gnp, gen_near_regular, read_coloring, read_graph, write_coloring, write_graph
from .graph import BLANK
from .verify import palette_report, verify_proper

STATS_FIELDS = [
    "n", "m", "delta", "epsilon", "kappa", "ell", "seed", "success",
    "fail_reason", "stage1_colors", "flagged", "max_residual_degree",
    "total_colors", "stage1_millis", "stage2_millis",
]


def _env_seed() -> int:
    raw = os.environ.get("NEARVIZ_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"NEARVIZ_SEED must be an integer, got {raw!r}")


def _stats_row(g, cfg: RunConfig, seed: int, success: bool, stats) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "delta": g.max_degree,
        "epsilon": cfg.epsilon,
        "kappa": stats.kappa,
        "ell": stats.ell,
        "seed": seed,
        "success": int(success),
        "fail_reason": stats.fail_reason or "",
        "stage1_colors": stats.stage1_colors,
        "flagged": len(stats.flagged_edges),
        "max_residual_degree": stats.max_residual_degree,
        "total_colors": stats.total_colors,
        "stage1_millis": round(stats.stage1_millis, 3),
        "stage2_millis": round(stats.stage2_millis, 3),
    }


def _write_stats(path: str, config_line: str, rows: List[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# config {config_line}\n")
        writer = csv.DictWriter(fh, fieldnames=STATS_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def cmd_gen(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    try:
        if args.model == "gnp":
            if args.p is None:
                print("gen: --p is required for model gnp", file=sys.stderr)
                return 2
            g = gen_gnp(args.n, args.p, rng)
        else:
            if args.d is None:
                print("gen: --d is required for model regular", file=sys.stderr)
                return 2
            g = gen_near_regular(args.n, args.d, rng)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return 2
    write_graph(g, args.out)
    print(f"wrote {g.n} vertices, {g.m} edges (max degree {g.max_degree}) to {args.out}")
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = read_graph(args.graph)
    except (OSError, ParseError) as exc:
        print(f"color: {exc}", file=sys.stderr)
        return 2

    base_seed = args.seed if args.seed is not None else _env_seed()
    rows: List[dict] = []
    coloring = None
    stats = None
    used_seed = base_seed
    for attempt in range(args.retries + 1):
        used_seed = base_seed + attempt
        cfg = RunConfig(
            epsilon=args.epsilon,
            kappa_const=args.kappa_const,
            ell_const=args.ell_const,
            kappa_override=args.kappa,
            ell_override=args.ell,
            seed=used_seed,
            force=args.force,
            debug_check=args.debug_check,
        )
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                coloring, stats = edge_color(g, cfg)
        except ValueError as exc:
            print(f"color: {exc}", file=sys.stderr)
            return 2
        rows.append(_stats_row(g, cfg, used_seed, coloring is not None, stats))
        if coloring is not None:
            break
        print(f"attempt with seed {used_seed} failed: {stats.fail_reason}", file=sys.stderr)

    if args.stats_out:
        config_line = (
            f"graph={args.graph} epsilon={args.epsilon} seed={base_seed} "
            f"retries={args.retries} kappa={args.kappa} ell={args.ell} force={args.force}"
        )
        _write_stats(args.stats_out, config_line, rows)

    if coloring is None:
        print(f"color: failed after {args.retries + 1} attempt(s): {stats.fail_reason}", file=sys.stderr)
        return 1

    if args.out:
        write_coloring(coloring, g, args.out)
    distinct, max_color = palette_report(coloring)
    print(
        f"colored {g.m} edges with {distinct} colors (max color {max_color}, "
        f"seed {used_seed}, flagged {len(stats.flagged_edges)})"
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = read_graph(args.graph)
        colors = read_coloring(g, args.coloring)
    except (OSError, ParseError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    bad = verify_proper(g, colors, require_complete=args.complete)
    if bad is not None:
        print(f"violation: {bad.kind} at edges {bad.edges}", file=sys.stderr)
        return 1
    distinct, max_color = palette_report(colors)
    if args.max_colors is not None and max_color is not None and max_color > args.max_colors:
        print(f"violation: max color {max_color} exceeds bound {args.max_colors}", file=sys.stderr)
        return 1
    blanks = sum(1 for a in colors if a == BLANK)
    print(f"OK: proper, {distinct} colors, max color {max_color}, {blanks} blank")
    return 0


def _bench_trial(task) -> dict:
    """Worker for one (size, trial) cell; must stay picklable."""
    n, d, model, epsilon, kappa, ell, seed, size_idx, trial = task
    gseed = int(np.random.SeedSequence([seed, size_idx]).generate_state(1)[0])
    rng = np.random.default_rng(gseed)
    if model == "gnp":
        g = gen_gnp(n, d / (n - 1), rng)
    else:
        g = gen_near_regular(n, d, rng)
    run_seed = int(np.random.SeedSequence([seed, size_idx, trial]).generate_state(1)[0])
    cfg = RunConfig(
        epsilon=epsilon, kappa_override=kappa, ell_override=ell,
        seed=run_seed, force=True,
    )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        coloring, stats = edge_color(g, cfg)
    return _stats_row(g, cfg, run_seed, coloring is not None, stats)


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        targets = [int(tok) for tok in args.edges.split(",") if tok]
    except ValueError:
        print(f"bench: --edges expects comma-separated integers, got {args.edges!r}", file=sys.stderr)
        return 2
    if not targets or any(t <= 0 for t in targets):
        print("bench: --edges needs at least one positive target", file=sys.stderr)
        return 2
    seed = args.seed if args.seed is not None else _env_seed()

    tasks = []
    for size_idx, m_target in enumerate(targets):
        n = max(args.degree + 1, round(2 * m_target / args.degree))
        if args.model == "regular" and (n * args.degree) % 2:
            n += 1
        for trial in range(args.trials):
            tasks.append((n, args.degree, args.model, args.epsilon,
                          args.kappa, args.ell, seed, size_idx, trial))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_trial, tasks))
    else:
        rows = [_bench_trial(t) for t in tasks]

    config_line = (
        f"edges={args.edges} degree={args.degree} model={args.model} "
        f"epsilon={args.epsilon} kappa={args.kappa} ell={args.ell} "
        f"trials={args.trials} seed={seed}"
    )
    _write_stats(args.out, config_line, rows)

    if args.summary:
        per_size = {}
        for row in rows:
            per_size.setdefault(row["m"], []).append(row)
        prev_median = None
        for m in sorted(per_size):
            group = per_size[m]
            walls = sorted(r["stage1_millis"] + r["stage2_millis"] for r in group)
            median = walls[len(walls) // 2]
            ratio = "" if prev_median in (None, 0) else f" ratio={median / prev_median:.2f}"
            ok = sum(r["success"] for r in group)
            print(f"m={m} trials={len(group)} ok={ok} median_ms={median:.1f}{ratio}")
            prev_median = median
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nearviz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random graph edge-list file")
    p_gen.add_argument("--model", choices=["gnp", "regular"], default="gnp")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--p", type=float, help="edge probability (gnp)")
    p_gen.add_argument("--d", type=int, help="degree (regular)")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_gen, seed_fallback=True)

    p_color = sub.add_parser("color", help="run the two-stage coloring on a graph file")
    p_color.add_argument("graph")
    p_color.add_argument("--epsilon", type=float, required=True)
    p_color.add_argument("--seed", type=int, default=None)
    p_color.add_argument("--kappa-const", type=float, default=50.0)
    p_color.add_argument("--ell-const", type=float, default=50.0)
    p_color.add_argument("--kappa", type=int, default=None, help="override the palette sample count")
    p_color.add_argument("--ell", type=int, default=None, help="override the path-length cutoff")
    p_color.add_argument("--force", action="store_true", help="run below the guaranteed degree regime")
    p_color.add_argument("--retries", type=int, default=0, help="rerun with seed+1, seed+2, ... on failure")
    p_color.add_argument("--debug-check", action="store_true", help="full properness rescan every iteration")
    p_color.add_argument("--out", help="write the coloring file here")
    p_color.add_argument("--stats-out", help="write a per-attempt stats CSV here")
    p_color.set_defaults(func=cmd_color)

    p_verify = sub.add_parser("verify", help="check a coloring file against its graph")
    p_verify.add_argument("graph")
    p_verify.add_argument("coloring")
    p_verify.add_argument("--complete", action="store_true", help="also reject blank edges")
    p_verify.add_argument("--max-colors", type=int, default=None, help="reject colors above this bound")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time runs across graph sizes, writing a CSV")
    p_bench.add_argument("--edges", required=True, help="comma-separated target edge counts")
    p_bench.add_argument("--degree", type=int, default=40)
    p_bench.add_argument("--model", choices=["gnp", "regular"], default="gnp")
    p_bench.add_argument("--epsilon", type=float, default=0.5)
    p_bench.add_argument("--kappa", type=int, default=100)
    p_bench.add_argument("--ell", type=int, default=150)
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--out", required=True)
    p_bench.add_argument("--summary", action="store_true", help="print per-size medians")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "gen":
        args.seed = _env_seed()
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
