"""Immutable simple graphs and mutable proper partial edge-colorings.

Colors are integers 1..q. The value 0 (``BLANK``) is a reserved sentinel
meaning "uncolored" and is never a valid color. All coloring state is
indexed by dense edge ids assigned at graph construction.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

BLANK = 0


class Graph:
    """Immutable simple graph with dense edge ids.

    Vertices are 0..n-1. Edge ids are 0..m-1, assigned in input order.
    Safe to share read-only across concurrent runs.
    """

    __slots__ = ("n", "m", "edges", "adjacency", "max_degree", "_pair_index")

    def __init__(self, n: int, edge_list: Iterable[Tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edges: list[Tuple[int, int]] = []
        adjacency: list[list[Tuple[int, int]]] = [[] for _ in range(n)]
        seen: set[Tuple[int, int]] = set()
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has out-of-range endpoint for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            eid = len(edges)
            edges.append((u, v))
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        self.n = n
        self.m = len(edges)
        self.edges = edges
        self.adjacency = adjacency
        self.max_degree = max((len(a) for a in adjacency), default=0)
        self._pair_index: Optional[dict] = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> Optional[int]:
        """Id of edge uv in either orientation, or None if absent.

        Builds a pair index lazily; large runs that never need pair
        lookups pay nothing.
        """
        if self._pair_index is None:
            index = {}
            for eid, (a, b) in enumerate(self.edges):
                index[(a, b)] = eid
                index[(b, a)] = eid
            self._pair_index = index
        return self._pair_index.get((u, v))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def build_graph(n: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting self-loops, duplicates and bad ids."""
    return Graph(n, edge_list)


class PartialColoring:
    """Mutable proper partial q-edge-coloring with O(1) missing-color lookup.

    ``color_of[e]`` is the color of edge e, or BLANK. For every vertex x
    and color a, ``_missing_edge[x][a]`` holds the id of the a-colored
    edge at x, or -1 when a is missing at x (index 0 is unused). The
    per-vertex arrays cost Theta(n*q) memory; constant-time lookup is
    what the runtime of the chain operations rests on.

    ``version`` counts mutations; chain objects capture it so that a
    chain built against an older state is rejected at augment time.

    Exclusively owned by one run; no internal synchronization.
    """

    __slots__ = ("graph", "q", "color_of", "_missing_edge", "version")

    def __init__(self, graph: Graph, q: int):
        if q < 1:
            raise ValueError("palette size q must be at least 1")
        self.graph = graph
        self.q = q
        self.color_of: list[int] = [BLANK] * graph.m
        self._missing_edge: list[list[int]] = [[-1] * (q + 1) for _ in range(graph.n)]
        self.version = 0

    def is_missing(self, x: int, alpha: int) -> bool:
        """True when no edge at x carries color alpha."""
        return self._missing_edge[x][alpha] == -1

    def missing_lookup(self, x: int, alpha: int) -> Optional[int]:
        """The unique neighbor y with color(xy) == alpha, or None."""
        if not 1 <= alpha <= self.q:
            raise ValueError(f"color {alpha} outside palette [1..{self.q}]")
        eid = self._missing_edge[x][alpha]
        if eid == -1:
            return None
        u, v = self.graph.edges[eid]
        return v if u == x else u

    def missing_edge_id(self, x: int, alpha: int) -> int:
        """Id of the alpha-colored edge at x, or -1."""
        return self._missing_edge[x][alpha]

    def set_color(self, e: int, alpha: int) -> None:
        """Color a blank edge; rejects anything that would break properness."""
        if not 1 <= alpha <= self.q:
            raise ValueError(f"color {alpha} outside palette [1..{self.q}]")
        if self.color_of[e] != BLANK:
            raise ValueError(f"edge {e} already colored")
        u, v = self.graph.edges[e]
        mu = self._missing_edge[u]
        mv = self._missing_edge[v]
        if mu[alpha] != -1 or mv[alpha] != -1:
            raise ValueError(f"color {alpha} not missing at both endpoints of edge {e}")
        self.color_of[e] = alpha
        mu[alpha] = e
        mv[alpha] = e
        self.version += 1

    def unset_color(self, e: int) -> None:
        """Blank a colored edge and clear both endpoints' index entries."""
        alpha = self.color_of[e]
        if alpha == BLANK:
            raise ValueError(f"edge {e} already blank")
        u, v = self.graph.edges[e]
        self.color_of[e] = BLANK
        self._missing_edge[u][alpha] = -1
        self._missing_edge[v][alpha] = -1
        self.version += 1

    def colored_count(self) -> int:
        return sum(1 for a in self.color_of if a != BLANK)


def new_coloring(g: Graph, q: int) -> PartialColoring:
    """Fresh all-blank coloring over palette [1..q]."""
    return PartialColoring(g, q)
