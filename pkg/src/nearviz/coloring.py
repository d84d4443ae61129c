"""The two-stage edge-coloring pipeline.

Stage 1 colors edges one at a time with Vizing-chain augmentations over
a small sampled palette, flagging the rare edge cut from an overlong
path. Stage 2 greedy-colors the residual graph of flagged edges with a
fresh offset palette. On success the final coloring is proper, complete,
and uses at most floor((1+epsilon)*Delta) colors.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .chains import augment, make_fan, vizing_chain
from .graph import BLANK, Graph, PartialColoring, build_graph
from .greedy import greedy_color
from .verify import verify_proper

#: minimum max-degree multiplier for the regime in which the algorithm's
#: guarantees hold: Delta >= REGIME_CONST * ln(n) / epsilon
REGIME_CONST = 500.0


@dataclass
class RunConfig:
    """Parameters for one run.

    Defaults follow the constant-50 parameterization; desk-scale
    experiments use the overrides together with ``force``.
    """

    epsilon: float
    kappa_const: float = 50.0
    ell_const: float = 50.0
    kappa_override: Optional[int] = None
    ell_override: Optional[int] = None
    seed: int = 0
    force: bool = False
    debug_check: bool = False

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must be in (0, 1)")
        if self.kappa_const < 1 or self.ell_const < 1:
            raise ValueError("parameter constants must be at least 1")
        if self.kappa_override is not None and self.kappa_override < 1:
            raise ValueError("kappa override must be at least 1")
        if self.ell_override is not None and self.ell_override < 1:
            raise ValueError("ell override must be at least 1")


@dataclass(frozen=True)
class Params:
    q1: int
    kappa: int
    ell: int
    regime_threshold: float


@dataclass
class RunStats:
    iterations: int = 0
    flagged_edges: List[int] = field(default_factory=list)
    residual_degrees: Optional[List[int]] = None
    max_residual_degree: int = 0
    stage1_colors: int = 0
    total_colors: int = 0
    fail_reason: Optional[str] = None  # stage1-fan | stage1-beta | stage2-degree
    kappa: int = 0
    ell: int = 0
    stage1_millis: float = 0.0
    stage2_millis: float = 0.0


class UncoloredPool:
    """Dynamic edge-id set with O(1) uniform sampling and O(1) removal.

    Array plus swap-remove with an id->position index.
    """

    __slots__ = ("_items", "_pos")

    def __init__(self, edge_ids):
        self._items = list(edge_ids)
        self._pos = {e: i for i, e in enumerate(self._items)}

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, e: int) -> bool:
        return e in self._pos

    def sample(self, rng) -> int:
        if not self._items:
            raise IndexError("sample from empty pool")
        return self._items[int(rng.integers(len(self._items)))]

    def remove(self, e: int) -> None:
        pos = self._pos.pop(e)
        last = self._items.pop()
        if last != e:
            self._items[pos] = last
            self._pos[last] = pos


def resolve_params(g: Graph, cfg: RunConfig) -> Params:
    """Resolve the stage-1 palette and chain parameters for a graph.

    kappa = ceil(kappa_const * ln(n) / epsilon) and
    ell = ceil(ell_const * kappa^2 * ln(n) / epsilon) unless overridden.
    Graphs below the degree regime Delta >= 500 ln(n)/epsilon are
    rejected unless ``force`` is set (a warning is emitted either way).
    """
    if g.n < 2:
        raise ValueError("graph must have at least 2 vertices")
    eps = cfg.epsilon
    logn = math.log(g.n)
    if cfg.kappa_override is not None:
        kappa = cfg.kappa_override
    else:
        kappa = math.ceil(cfg.kappa_const * logn / eps)
    if cfg.ell_override is not None:
        ell = cfg.ell_override
    else:
        ell = math.ceil(cfg.ell_const * kappa * kappa * logn / eps)
    if cfg.kappa_override is not None or cfg.ell_override is not None:
        warnings.warn(
            "kappa/ell overridden: high-probability guarantees are void",
            stacklevel=2,
        )
    q1 = math.floor((1.0 + eps / 2.0) * g.max_degree)
    threshold = REGIME_CONST * logn / eps
    if g.max_degree < threshold:
        msg = (
            f"max degree {g.max_degree} below regime threshold "
            f"{threshold:.1f} (= 500 ln(n)/epsilon); guarantees do not apply"
        )
        warnings.warn(msg, stacklevel=2)
        if not cfg.force:
            raise ValueError(msg)
    return Params(q1, kappa, ell, threshold)


def sample_palette(q1: int, kappa: int, rng) -> List[int]:
    """kappa uniform draws (with replacement) from [1..q1], deduped, sorted."""
    if q1 < 1:
        raise ValueError("palette size must be at least 1")
    if kappa < 1:
        raise ValueError("sample count must be at least 1")
    draws = rng.integers(1, q1 + 1, size=kappa)
    return np.unique(draws).tolist()


def stage1(
    g: Graph, cfg: RunConfig, params: Params, rng
) -> Tuple[Optional[PartialColoring], RunStats]:
    """Run the augmentation loop for exactly m iterations.

    Each iteration draws a uniform (edge, endpoint) from the pool of
    uncolored-and-unflagged edges, samples a palette, builds a chain and
    augments. Returns (None, stats) if chain construction fails.
    """
    stats = RunStats(kappa=params.kappa, ell=params.ell)
    if g.m == 0:
        return PartialColoring(g, max(params.q1, 1)), stats
    c = PartialColoring(g, params.q1)

    pool = UncoloredPool(range(g.m))
    q1, kappa, ell = params.q1, params.kappa, params.ell
    edges = g.edges
    for i in range(g.m):
        e = pool.sample(rng)
        u, v = edges[e]
        x = v if int(rng.integers(2)) else u
        colors = sample_palette(q1, kappa, rng)
        chain = vizing_chain(c, e, x, colors, ell)
        if chain is None:
            stats.iterations = i
            stats.fail_reason = (
                "stage1-fan" if make_fan(c, e, x, colors) is None else "stage1-beta"
            )
            return None, stats
        out = augment(c, chain, ell, rng)
        if out.flagged_edge is not None:
            stats.flagged_edges.append(out.flagged_edge)
        pool.remove(e)
        stats.iterations = i + 1
        if cfg.debug_check:
            bad = verify_proper(g, c)
            if bad is not None:
                raise RuntimeError(f"properness rescan failed at iteration {i}: {bad}")
    return c, stats


def residual_subgraph(g: Graph, c: PartialColoring) -> Graph:
    """Subgraph on the same vertex set induced by the blank edges."""
    return build_graph(g.n, [g.edges[e] for e in range(g.m) if c.color_of[e] == BLANK])


def edge_color(g: Graph, cfg: RunConfig) -> Tuple[Optional[PartialColoring], RunStats]:
    """Full two-stage run; returns (coloring, stats) or (None, stats) on FAIL.

    Failures (chain construction, or a residual graph too dense) are
    surfaced, never retried internally; callers may rerun with a new seed.
    """
    if g.max_degree == 0:
        stats = RunStats()
        return PartialColoring(g, 1), stats

    params = resolve_params(g, cfg)
    rng = np.random.default_rng(cfg.seed)

    t0 = time.perf_counter()
    c, stats = stage1(g, cfg, params, rng)
    stats.stage1_millis = (time.perf_counter() - t0) * 1000.0
    if c is None:
        return None, stats

    t1 = time.perf_counter()
    blanks = [e for e in range(g.m) if c.color_of[e] == BLANK]
    if sorted(stats.flagged_edges) != blanks:
        raise RuntimeError("flagged-edge bookkeeping disagrees with blank-edge scan")
    degs = [0] * g.n
    for e in blanks:
        u, v = g.edges[e]
        degs[u] += 1
        degs[v] += 1
    stats.residual_degrees = degs
    dstar = max(degs) if degs else 0
    stats.max_residual_degree = dstar
    used1 = {a for a in c.color_of if a != BLANK}
    stats.stage1_colors = len(used1)

    if dstar > cfg.epsilon * g.max_degree / 6.0:
        stats.fail_reason = "stage2-degree"
        stats.stage2_millis = (time.perf_counter() - t1) * 1000.0
        return None, stats

    if dstar == 0:
        final = c
        stats.total_colors = stats.stage1_colors
        stats.stage2_millis = (time.perf_counter() - t1) * 1000.0
        return final, stats

    gstar = residual_subgraph(g, c)
    q2 = 3 * dstar
    psi, _report = greedy_color(gstar, q2, rng)
    offset = params.q1
    final = PartialColoring(g, offset + q2)
    pos = {e: i for i, e in enumerate(blanks)}
    for e in range(g.m):
        a = c.color_of[e]
        if a == BLANK:
            a = psi.color_of[pos[e]] + offset
        final.set_color(e, a)
    stats.total_colors = len({a for a in final.color_of})
    stats.stage2_millis = (time.perf_counter() - t1) * 1000.0
    return final, stats
