"""Randomized greedy edge-coloring by rejection sampling.

Each edge, in id order, repeatedly draws a uniform color from [1..q]
until one is missing at both endpoints. With q >= 2*Delta - 1 a valid
color always exists, so every rejection loop terminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .graph import BLANK, Graph, PartialColoring


@dataclass(frozen=True)
class GreedyReport:
    attempts_total: int
    attempts_max_per_edge: int
    colors_used: int


def greedy_color(g: Graph, q: int, rng, force: bool = False) -> Tuple[PartialColoring, GreedyReport]:
    """Color every edge of g with palette [1..q] by rejection sampling.

    Rejects q < 2*Delta - 1 unless ``force`` is set; forced runs are
    guarded by a per-edge attempt cap far above the whp regime, so a
    non-colorable edge produces a diagnostic error instead of a hang.
    """
    if q < 1:
        raise ValueError("palette size q must be at least 1")
    if g.m >= 1 and q < 2 * g.max_degree - 1 and not force:
        raise ValueError(
            f"palette q={q} below 2*Delta-1={2 * g.max_degree - 1}; "
            "termination not guaranteed (pass force=True to override)"
        )
    c = PartialColoring(g, q)
    cap = max(1, math.ceil(10 * q * math.log(max(g.n, 2))))
    total = 0
    worst = 0
    for e, (u, v) in enumerate(g.edges):
        mu = c._missing_edge[u]
        mv = c._missing_edge[v]
        t = 0
        while True:
            t += 1
            if t > cap:
                raise RuntimeError(
                    f"greedy rejection cap ({cap}) exceeded on edge {e}=({u},{v}); "
                    f"palette q={q} is too small for this graph"
                )
            a = int(rng.integers(1, q + 1))
            if mu[a] == -1 and mv[a] == -1:
                c.set_color(e, a)
                break
        total += t
        if t > worst:
            worst = t
    used = len({a for a in c.color_of if a != BLANK})
    return c, GreedyReport(total, worst, used)
