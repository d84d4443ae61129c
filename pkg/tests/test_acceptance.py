"""End-to-end acceptance checks, one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines. The
two 50-trial batteries (gnp n=300 p=0.5 eps=0.5; near-regular n=500
d=200 eps=0.3) are computed once and shared by the palette-bound and
success-rate checks.
"""

import math
import time
import warnings

import numpy as np
import pytest

from nearviz import (
    BLANK,
    AlternatingPath,
    RunConfig,
    build_graph,
    edge_color,
    flip_path,
    gen_gnp,
    gen_near_regular,
    greedy_color,
    make_fan,
    naive_make_fan,
    naive_vizing_chain,
    new_coloring,
    shift_fan,
    verify_proper,
    vizing_chain,
)


def report(num, label, ok):
    print(f"\n[criterion {num}] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def trial_params(n, eps):
    kappa = math.ceil(8 * math.log(n) / eps)
    ell = math.ceil(2 * kappa * math.log(n) / eps)
    return kappa, ell


def index_consistent(c):
    """Missing-color index agrees with a full adjacency rescan."""
    g = c.graph
    for x in range(g.n):
        at = {}
        for y, eid in g.adjacency[x]:
            a = c.color_of[eid]
            if a != BLANK:
                if a in at:
                    return False
                at[a] = eid
        for a in range(1, c.q + 1):
            if c.missing_edge_id(x, a) != at.get(a, -1):
                return False
    return True


@pytest.fixture(scope="module")
def palette_trials():
    """50 seeded runs on each of the two reference configurations."""
    results = {}
    for name, g, eps in (
        ("gnp", gen_gnp(300, 0.5, np.random.default_rng(1000)), 0.5),
        ("regular", gen_near_regular(500, 200, np.random.default_rng(2000)), 0.3),
    ):
        kappa, ell = trial_params(g.n, eps)
        runs = []
        for seed in range(50):
            cfg = RunConfig(
                epsilon=eps, kappa_override=kappa, ell_override=ell,
                seed=seed, force=True,
            )
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                c, stats = edge_color(g, cfg)
            runs.append((c, stats))
        results[name] = (g, eps, runs)
    return results


def test_criterion_1_palette_bound(palette_trials):
    violations = 0
    successes = 0
    for g, eps, runs in palette_trials.values():
        bound = math.floor((1 + eps) * g.max_degree)
        for c, _stats in runs:
            if c is None:
                continue
            successes += 1
            if verify_proper(g, c, require_complete=True) is not None:
                violations += 1
            elif max(c.color_of) > bound:
                violations += 1
    ok = successes > 0 and violations == 0
    report(1, f"proper colorings within floor((1+eps)*Delta) ({successes} successes, "
              f"{violations} violations)", ok)


def test_criterion_2_success_rate_and_residual(palette_trials):
    ok = True
    detail = []
    for name, (g, eps, runs) in palette_trials.items():
        n_ok = sum(1 for c, _ in runs if c is not None)
        rate = n_ok / len(runs)
        ratios = [
            s.max_residual_degree / g.max_degree for c, s in runs if c is not None
        ]
        worst = max(ratios) if ratios else 0.0
        detail.append(f"{name}: rate={rate:.2f} worst_residual_ratio={worst:.4f}")
        if rate < 0.9 or worst > eps / 6:
            ok = False
    report(2, "success rate >= 90% and residual degree <= eps*Delta/6 "
              f"({'; '.join(detail)})", ok)


def test_criterion_3_debug_rescans_clean():
    g = gen_gnp(120, 0.5, np.random.default_rng(33))
    kappa, ell = trial_params(120, 0.5)
    failures = 0
    for seed in range(10):
        cfg = RunConfig(epsilon=0.5, kappa_override=kappa, ell_override=ell,
                        seed=seed, force=True, debug_check=True)
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                edge_color(g, cfg)
        except RuntimeError:
            failures += 1
    report(3, f"per-iteration properness rescans, 10 debug runs at n=120 "
              f"({failures} failures)", failures == 0)


def random_instance(rng):
    n = int(rng.integers(4, 31))
    g = gen_gnp(n, 0.45, rng)
    if g.m == 0:
        return None
    q = int(rng.integers(3, 11))
    c = new_coloring(g, q)
    for e in rng.permutation(g.m):
        u, v = g.edges[e]
        a = int(rng.integers(1, q + 1))
        if c.is_missing(u, a) and c.is_missing(v, a) and rng.random() < 0.8:
            c.set_color(int(e), a)
    blanks = [e for e in range(g.m) if c.color_of[e] == BLANK]
    if not blanks:
        return None
    e = blanks[int(rng.integers(len(blanks)))]
    x = g.edges[e][int(rng.integers(2))]
    size = int(rng.integers(1, min(q, 6) + 1))
    colors = sorted(rng.choice(np.arange(1, q + 1), size=size, replace=False).tolist())
    return g, c, e, x, colors


def test_criterion_4_fast_matches_naive_oracle():
    rng = np.random.default_rng(404)
    compared = 0
    fails_seen = 0
    mismatches = 0
    while compared < 1000:
        inst = random_instance(rng)
        if inst is None:
            continue
        g, c, e, x, colors = inst
        ell = int(rng.integers(1, 12))
        if make_fan(c, e, x, colors) != naive_make_fan(c, e, x, colors):
            mismatches += 1
        fast = vizing_chain(c, e, x, colors, ell)
        slow = naive_vizing_chain(c, e, x, colors, ell)
        if fast != slow:
            mismatches += 1
        if fast is None:
            fails_seen += 1
        compared += 1
    ok = mismatches == 0 and fails_seen > 0
    report(4, f"fan/chain identical to full-rescan oracle on 1000 instances "
              f"({fails_seen} FAIL outcomes covered, {mismatches} mismatches)", ok)


def test_criterion_5_shift_and_flip_preserve_invariants():
    rng = np.random.default_rng(505)
    shifts = flips = bad = 0
    while shifts < 1000:
        inst = random_instance(rng)
        if inst is None:
            continue
        g, c, e, x, colors = inst
        res = make_fan(c, e, x, colors)
        if res is None:
            continue
        shift_fan(c, res.fan)
        if verify_proper(g, c) is not None or not index_consistent(c):
            bad += 1
        shifts += 1
    while flips < 1000:
        inst = random_instance(rng)
        if inst is None:
            continue
        g, c, _, x, _ = inst
        q = c.q
        present = [a for a in range(1, q + 1) if not c.is_missing(x, a)]
        absent = [a for a in range(1, q + 1) if c.is_missing(x, a)]
        if not present or not absent:
            continue
        alpha = present[int(rng.integers(len(present)))]
        beta = absent[int(rng.integers(len(absent)))]
        verts = [x]
        eids = []
        cur, want = x, alpha
        while True:
            eid = c.missing_edge_id(cur, want)
            if eid == -1:
                break
            u, v = g.edges[eid]
            cur = v if u == cur else u
            verts.append(cur)
            eids.append(eid)
            want = beta if want == alpha else alpha
        p = AlternatingPath(tuple(verts), alpha, beta, tuple(eids))
        snapshot = list(c.color_of)
        flip_path(c, p)
        if verify_proper(g, c) is not None or not index_consistent(c):
            bad += 1
        flip_path(c, p)
        if c.color_of != snapshot or not index_consistent(c):
            bad += 1
        flips += 1
    report(5, f"1000 fan shifts + 1000 path flips keep properness and the "
              f"index consistent; flip is an involution ({bad} violations)", bad == 0)


def test_criterion_6_greedy_attempt_bounds():
    g = gen_gnp(200, 0.2, np.random.default_rng(66))
    q = 3 * g.max_degree
    cap = 10 * math.log(200)
    worst_mean = 0.0
    worst_max = 0
    bad = 0
    for seed in range(100):
        c, rep = greedy_color(g, q, np.random.default_rng(seed))
        if verify_proper(g, c, require_complete=True) is not None:
            bad += 1
        worst_mean = max(worst_mean, rep.attempts_total / g.m)
        worst_max = max(worst_max, rep.attempts_max_per_edge)
    ok = bad == 0 and worst_mean <= 3.0 and worst_max <= cap
    report(6, f"greedy at q=3*Delta over 100 runs: mean attempts "
              f"{worst_mean:.2f} <= 3, max {worst_max} <= {cap:.1f}", ok)


def test_criterion_7_near_linear_scaling():
    degree = 40
    eps = 0.5
    kappa, ell = 100, 150
    targets = [100_000, 200_000, 400_000, 800_000]
    t_start = time.perf_counter()
    medians = []
    for idx, m_target in enumerate(targets):
        n = round(2 * m_target / degree)
        g = gen_gnp(n, degree / (n - 1), np.random.default_rng(7000 + idx))
        walls = []
        for trial in range(5):
            cfg = RunConfig(epsilon=eps, kappa_override=kappa, ell_override=ell,
                            seed=trial, force=True)
            t0 = time.perf_counter()
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                c, _ = edge_color(g, cfg)
            walls.append(time.perf_counter() - t0)
            assert c is not None
        medians.append(sorted(walls)[2])
    total_min = (time.perf_counter() - t_start) / 60
    ratios = [b / a for a, b in zip(medians, medians[1:])]
    ok = all(1.3 <= r <= 3.5 for r in ratios) and total_min < 10
    report(7, "doubling m multiplies median wall time by [1.3, 3.5] "
              f"(ratios {[f'{r:.2f}' for r in ratios]}, {total_min:.1f} min)", ok)


def test_criterion_8_determinism():
    g = gen_gnp(150, 0.4, np.random.default_rng(88))
    kappa, ell = trial_params(150, 0.5)
    outputs = []
    for _ in range(2):
        cfg = RunConfig(epsilon=0.5, kappa_override=kappa, ell_override=ell,
                        seed=99, force=True)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            c, s = edge_color(g, cfg)
        outputs.append((
            tuple(c.color_of) if c is not None else None,
            s.iterations, tuple(s.flagged_edges),
            tuple(s.residual_degrees or ()), s.max_residual_degree,
            s.stage1_colors, s.total_colors, s.fail_reason, s.kappa, s.ell,
        ))
    ok = outputs[0] == outputs[1]
    report(8, "identical graph and config give byte-identical colorings and "
              "stats (timing excluded)", ok)
