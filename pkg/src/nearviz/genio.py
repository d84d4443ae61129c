"""Random graph generators and edge-list file I/O.

File format: a required header line ``p <n> <m>`` followed by one edge
per line as two whitespace-separated 0-indexed vertex ids. Lines
starting with ``#`` and blank lines are ignored. Coloring files hold one
``<u> <v> <color>`` line per edge.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from .graph import BLANK, Graph, PartialColoring, build_graph


class ParseError(ValueError):
    """Malformed input file; message carries the offending line number."""


def _decode_pair_indices(t: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Map linear indices of the upper triangle to (i, j) pairs with i < j.

    Pair (i, j) has index S(i) + (j - i - 1) where S(i) = i*(2n-i-1)/2.
    The float solve for i can be off by one near row boundaries, so it
    is corrected with exact integer arithmetic.
    """
    tt = t.astype(np.int64)
    b = 2 * n - 1
    i = ((b - np.sqrt(b * b - 8.0 * tt.astype(np.float64))) // 2).astype(np.int64)
    i = np.clip(i, 0, n - 2)
    for _ in range(3):
        start = i * (2 * n - i - 1) // 2
        too_high = start > tt
        i = np.where(too_high, i - 1, i)
        start = i * (2 * n - i - 1) // 2
        nxt = (i + 1) * (2 * n - i - 2) // 2
        too_low = nxt <= tt
        i = np.where(too_low, i + 1, i)
        if not (too_high.any() or too_low.any()):
            break
    start = i * (2 * n - i - 1) // 2
    j = tt - start + i + 1
    return i, j


def gen_gnp(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p): each unordered pair independently with prob p.

    Samples the edge count and then a uniform subset of pair indices, so
    dense vertex counts never materialize all n*(n-1)/2 pairs.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        return build_graph(n, [])
    if p == 1.0:
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    k = int(rng.binomial(total, p))
    if k == 0:
        return build_graph(n, [])
    chosen = np.empty(0, dtype=np.int64)
    while chosen.size < k:
        need = k - chosen.size
        fresh = rng.integers(0, total, size=need, dtype=np.int64)
        chosen = np.unique(np.concatenate([chosen, fresh]))
    us, vs = _decode_pair_indices(chosen, n)
    return build_graph(n, list(zip(us.tolist(), vs.tolist())))


def gen_near_regular(n: int, d: int, rng) -> Graph:
    """Random d-regular simple graph via configuration-model pairing.

    Delegates to networkx's pairing generator (loop/duplicate rejection
    with internal retries). Requires n*d even and d < n.
    """
    if d < 0:
        raise ValueError("target degree must be non-negative")
    if d >= n:
        raise ValueError("target degree must be below the vertex count")
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    if d == 0:
        return build_graph(n, [])
    seed = int(rng.integers(2**32))
    try:
        gnx = nx.random_regular_graph(d, n, seed=seed)
    except nx.NetworkXError as exc:
        raise ValueError(f"pairing failed for n={n}, d={d}: {exc}") from exc
    edges = sorted((u, v) if u < v else (v, u) for u, v in gnx.edges())
    return build_graph(n, edges)


def _data_lines(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line


def read_graph(path: str) -> Graph:
    """Parse an edge-list file, rejecting malformed input with line numbers."""
    lines = _data_lines(path)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(f"{path}: empty file, missing 'p <n> <m>' header") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "p":
        raise ParseError(f"{path}:{lineno}: expected header 'p <n> <m>', got {header!r}")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"{path}:{lineno}: non-integer counts in header") from None
    if n < 0 or m < 0:
        raise ParseError(f"{path}:{lineno}: negative counts in header")

    edges: List[Tuple[int, int]] = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{path}:{lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer vertex id") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"{path}:{lineno}: vertex id out of range for n={n}")
        if u == v:
            raise ParseError(f"{path}:{lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"{path}:{lineno}: duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"{path}: header declares m={m} but found {len(edges)} edges")
    return build_graph(n, edges)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"p {g.n} {g.m}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")


def write_coloring(c: Union[PartialColoring, Sequence[int]], g: Graph, path: str) -> None:
    """One '<u> <v> <color>' line per edge, in edge-id order (0 = blank)."""
    colors = getattr(c, "color_of", c)
    with open(path, "w", encoding="utf-8") as fh:
        for e, (u, v) in enumerate(g.edges):
            fh.write(f"{u} {v} {colors[e]}\n")


def read_coloring(g: Graph, path: str) -> List[int]:
    """Read a coloring file back into an edge-id-indexed color list.

    Every line must name an edge of g; edges absent from the file stay
    blank. Duplicate lines for one edge are rejected.
    """
    colors = [BLANK] * g.m
    assigned = [False] * g.m
    for lineno, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"{path}:{lineno}: expected '<u> <v> <color>', got {line!r}")
        try:
            u, v, a = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer field") from None
        eid = g.edge_id(u, v) if 0 <= u < g.n and 0 <= v < g.n else None
        if eid is None:
            raise ParseError(f"{path}:{lineno}: ({u},{v}) is not an edge of the graph")
        if assigned[eid]:
            raise ParseError(f"{path}:{lineno}: duplicate entry for edge ({u},{v})")
        if a < 0:
            raise ParseError(f"{path}:{lineno}: negative color {a}")
        assigned[eid] = True
        colors[eid] = a
    return colors
