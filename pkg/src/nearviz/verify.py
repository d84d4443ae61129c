"""Independent verification oracles.

The properness checker rebuilds everything from the color assignment
alone and never reads the missing-color index, so it cannot share
failure modes with the code it checks. The naive fan/chain builders are
deliberate full-rescan transcriptions used as brute-force oracles; they
share no lookup code with the fast versions in ``chains``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .chains import AlternatingPath, Fan, FanResult, VizingChain
from .graph import BLANK, Graph, PartialColoring


@dataclass(frozen=True)
class Violation:
    kind: str  # "conflict" | "blank-edge"
    edges: Tuple[int, ...]


def _color_list(coloring: Union[PartialColoring, Sequence[int]]) -> Sequence[int]:
    return getattr(coloring, "color_of", coloring)


def verify_proper(
    g: Graph,
    coloring: Union[PartialColoring, Sequence[int]],
    require_complete: bool = False,
) -> Optional[Violation]:
    """Scan for two same-colored edges sharing an endpoint.

    Accepts a PartialColoring or a bare color sequence (0 = blank).
    Returns the first violation in edge-id order, or None.
    """
    colors = _color_list(coloring)
    if len(colors) != g.m:
        raise ValueError(f"coloring has {len(colors)} entries, graph has {g.m} edges")
    if require_complete:
        for e in range(g.m):
            if colors[e] == BLANK:
                return Violation("blank-edge", (e,))
    at_vertex: list[dict] = [{} for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        a = colors[e]
        if a == BLANK:
            continue
        prev = at_vertex[u].get(a)
        if prev is not None:
            return Violation("conflict", (prev, e))
        prev = at_vertex[v].get(a)
        if prev is not None:
            return Violation("conflict", (prev, e))
        at_vertex[u][a] = e
        at_vertex[v][a] = e
    return None


def palette_report(coloring: Union[PartialColoring, Sequence[int]]) -> Tuple[int, Optional[int]]:
    """(number of distinct colors used, largest color used or None)."""
    used = {a for a in _color_list(coloring) if a != BLANK}
    return len(used), (max(used) if used else None)


def _scan_color_at(c: PartialColoring, x: int, alpha: int) -> Optional[Tuple[int, int]]:
    """(neighbor, edge id) of the alpha-colored edge at x by full rescan."""
    for y, eid in c.graph.adjacency[x]:
        if c.color_of[eid] == alpha:
            return y, eid
    return None


def _scan_min_missing(c: PartialColoring, x: int, colors: Sequence[int]) -> int:
    """min of the missing-color set at x intersected with ``colors``, or -1."""
    used = {c.color_of[eid] for _, eid in c.graph.adjacency[x]}
    for a in colors:
        if a not in used:
            return a
    return -1


def naive_make_fan(
    c: PartialColoring, e: int, x: int, colors: Sequence[int]
) -> Optional[FanResult]:
    """Fan construction recomputing every missing set by full rescan."""
    if c.color_of[e] != BLANK:
        raise ValueError(f"edge {e} is not blank")
    u, v = c.graph.edges[e]
    if x == u:
        y = v
    elif x == v:
        y = u
    else:
        raise ValueError(f"vertex {x} is not an endpoint of edge {e}")
    leaves = [y]
    eids = [e]
    z = y
    while True:
        eta = _scan_min_missing(c, z, colors)
        if eta == -1:
            return None
        hit = _scan_color_at(c, x, eta)
        if hit is None:
            k = len(leaves)
            return FanResult(Fan(x, tuple(leaves), tuple(eids)), eta, k)
        z, ze = hit
        if z in leaves:
            return FanResult(Fan(x, tuple(leaves), tuple(eids)), eta, leaves.index(z))
        leaves.append(z)
        eids.append(ze)


def naive_vizing_chain(
    c: PartialColoring, e: int, x: int, colors: Sequence[int], ell: int
) -> Optional[VizingChain]:
    """Chain construction walking the path by adjacency rescans only."""
    if ell < 1:
        raise ValueError("path cap ell must be at least 1")
    res = naive_make_fan(c, e, x, colors)
    if res is None:
        return None
    fan, alpha = res.fan, res.alpha
    if res.j == fan.length:
        return VizingChain(fan, AlternatingPath((x,), alpha, alpha, ()), alpha, c.version)
    beta = _scan_min_missing(c, x, colors)
    if beta == -1:
        return None
    verts = [x]
    peids = []
    cur = x
    want = alpha
    while len(peids) < ell:
        hit = _scan_color_at(c, cur, want)
        if hit is None:
            break
        cur, eid = hit
        verts.append(cur)
        peids.append(eid)
        want = beta if want == alpha else alpha
    path = AlternatingPath(tuple(verts), alpha, beta, tuple(peids))
    return VizingChain(fan, path, alpha, c.version)
