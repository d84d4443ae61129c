"""Randomized near-optimal edge coloring.

A proper edge coloring of a simple graph with max degree Delta, using at
most floor((1+epsilon)*Delta) colors: a randomized Vizing-chain stage
colors almost everything from a small sampled palette, and a greedy
stage finishes the sparse residual with a fresh offset palette.
"""

from .chains import (
    AlternatingPath,
    AugmentOutcome,
    Fan,
    FanResult,
    VizingChain,
    augment,
    flip_path,
    make_fan,
    shift_fan,
    vizing_chain,
)
from .coloring import (
    Params,
    RunConfig,
    RunStats,
    UncoloredPool,
    edge_color,
    resolve_params,
    residual_subgraph,
    sample_palette,
    stage1,
)
from .genio import (
    ParseError,
    gen_gnp,
    gen_near_regular,
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
)
from .graph import BLANK, Graph, PartialColoring, build_graph, new_coloring
from .greedy import GreedyReport, greedy_color
from .verify import (
    Violation,
    naive_make_fan,
    naive_vizing_chain,
    palette_report,
    verify_proper,
)

__all__ = [
    "BLANK",
    "Graph",
    "PartialColoring",
    "build_graph",
    "new_coloring",
    "Fan",
    "AlternatingPath",
    "FanResult",
    "VizingChain",
    "AugmentOutcome",
    "make_fan",
    "vizing_chain",
    "shift_fan",
    "flip_path",
    "augment",
    "GreedyReport",
    "greedy_color",
    "RunConfig",
    "RunStats",
    "Params",
    "UncoloredPool",
    "resolve_params",
    "sample_palette",
    "stage1",
    "residual_subgraph",
    "edge_color",
    "Violation",
    "verify_proper",
    "palette_report",
    "naive_make_fan",
    "naive_vizing_chain",
    "ParseError",
    "gen_gnp",
    "gen_near_regular",
    "read_graph",
    "write_graph",
    "read_coloring",
    "write_coloring",
]
