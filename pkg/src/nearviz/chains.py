"""Fan and alternating-path machinery.

Constructing fans and truncated alternating paths, the shift/flip
recoloring primitives, and the single augmentation step that colors one
blank edge (possibly flagging one colored edge for later).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .graph import BLANK, PartialColoring


@dataclass(frozen=True)
class Fan:
    """A pivot vertex plus an ordered list of distinct neighbor leaves.

    The first pivot-leaf edge is blank; each later edge's color is
    missing at the previous leaf. ``edge_ids`` caches the pivot-leaf edge
    ids and is excluded from equality (it is derivable from the graph).
    """

    pivot: int
    leaves: Tuple[int, ...]
    edge_ids: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True)
class AlternatingPath:
    """A path whose edge colors alternate alpha, beta, alpha, ...

    ``vertices`` are distinct; the first edge (if any) is alpha-colored.
    A single-vertex path has length 0.
    """

    vertices: Tuple[int, ...]
    alpha: int
    beta: int
    edge_ids: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class FanResult:
    """Fan construction output: fan, color alpha, and index j.

    alpha is missing at both the last leaf and leaf j-1; j equal to the
    fan length means the last pivot-leaf edge is directly colorable
    after shifting.
    """

    fan: Fan
    alpha: int
    j: int


@dataclass(frozen=True)
class VizingChain:
    """A fan and an alternating path rooted at the fan's pivot.

    ``version`` captures the coloring's mutation counter at construction
    time so a stale chain is rejected at augment time.
    """

    fan: Fan
    path: AlternatingPath
    alpha: int
    version: int = field(default=0, compare=False)


@dataclass(frozen=True)
class AugmentOutcome:
    colored_edge: int
    flagged_edge: Optional[int]
    case: str  # happy | short | long-j | long-k


def _check_color_set(colors: Sequence[int], q: int) -> None:
    if not colors:
        raise ValueError("color set must be nonempty")
    prev = 0
    for a in colors:
        if a <= prev:
            raise ValueError("color set must be sorted ascending and duplicate-free")
        prev = a
    if prev > q:
        raise ValueError(f"color {prev} outside palette [1..{q}]")


def make_fan(c: PartialColoring, e: int, x: int, colors: Sequence[int]) -> Optional[FanResult]:
    """Grow a fan from blank edge e around pivot x, restricted to ``colors``.

    Returns None (FAIL) exactly when some leaf reached has no missing
    color inside ``colors``. Runs in O(|colors|^2).
    """
    if c.color_of[e] != BLANK:
        raise ValueError(f"edge {e} is not blank")
    u, v = c.graph.edges[e]
    if x == u:
        y = v
    elif x == v:
        y = u
    else:
        raise ValueError(f"vertex {x} is not an endpoint of edge {e}")
    _check_color_set(colors, c.q)

    missing = c._missing_edge
    miss_x = missing[x]
    edges = c.graph.edges
    leaves = [y]
    eids = [e]
    index_of = {y: 0}
    z = y
    while True:
        mz = missing[z]
        eta = -1
        for a in colors:
            if mz[a] == -1:
                eta = a
                break
        if eta == -1:
            return None
        ze = miss_x[eta]
        if ze == -1:
            k = len(leaves)
            return FanResult(Fan(x, tuple(leaves), tuple(eids)), eta, k)
        zu, zv = edges[ze]
        z = zv if zu == x else zu
        j = index_of.get(z)
        if j is not None:
            return FanResult(Fan(x, tuple(leaves), tuple(eids)), eta, j)
        index_of[z] = len(leaves)
        leaves.append(z)
        eids.append(ze)


def vizing_chain(
    c: PartialColoring, e: int, x: int, colors: Sequence[int], ell: int
) -> Optional[VizingChain]:
    """Build a fan plus a truncated alternating path starting at the pivot.

    Returns None (FAIL) when the fan construction fails or the pivot has
    no missing color inside ``colors``. The path has at most ``ell``
    edges. Runs in O(|colors|^2 + ell).
    """
    if ell < 1:
        raise ValueError("path cap ell must be at least 1")
    res = make_fan(c, e, x, colors)
    if res is None:
        return None
    fan, alpha = res.fan, res.alpha
    if res.j == fan.length:
        path = AlternatingPath((x,), alpha, alpha, ())
        return VizingChain(fan, path, alpha, c.version)

    missing = c._missing_edge
    miss_x = missing[x]
    beta = -1
    for a in colors:
        if miss_x[a] == -1:
            beta = a
            break
    if beta == -1:
        return None

    edges = c.graph.edges
    verts = [x]
    peids = []
    cur = x
    col = alpha
    other = beta
    while len(peids) < ell:
        eid = missing[cur][col]
        if eid == -1:
            break
        pu, pv = edges[eid]
        cur = pv if pu == cur else pu
        verts.append(cur)
        peids.append(eid)
        col, other = other, col
    path = AlternatingPath(tuple(verts), alpha, beta, tuple(peids))
    return VizingChain(fan, path, alpha, c.version)


def _fan_edge_ids(c: PartialColoring, f: Fan) -> Tuple[int, ...]:
    if len(f.edge_ids) == len(f.leaves):
        return f.edge_ids
    ids = []
    for y in f.leaves:
        eid = c.graph.edge_id(f.pivot, y)
        if eid is None:
            raise ValueError(f"fan leaf {y} is not adjacent to pivot {f.pivot}")
        ids.append(eid)
    return tuple(ids)


def _validate_fan(c: PartialColoring, f: Fan, eids: Tuple[int, ...]) -> list[int]:
    if len(set(f.leaves)) != len(f.leaves):
        raise ValueError("fan leaves must be distinct")
    colors = [c.color_of[eid] for eid in eids]
    if colors[0] != BLANK:
        raise ValueError("first fan edge must be blank")
    missing = c._missing_edge
    for i in range(1, len(colors)):
        a = colors[i]
        if a == BLANK or missing[f.leaves[i - 1]][a] != -1:
            raise ValueError("fan invalid under current coloring")
    return colors


def shift_fan(c: PartialColoring, f: Fan) -> None:
    """Rotate colors backward along the fan, blanking its last edge.

    Each pivot-leaf edge takes the color of its successor; the coloring
    stays proper and the missing index stays consistent.
    """
    eids = _fan_edge_ids(c, f)
    colors = _validate_fan(c, f, eids)
    k = len(eids)
    if k == 1:
        return
    x = f.pivot
    leaves = f.leaves
    co = c.color_of
    missing = c._missing_edge
    miss_x = missing[x]
    for i in range(1, k):
        a = colors[i]
        miss_x[a] = -1
        missing[leaves[i]][a] = -1
        co[eids[i]] = BLANK
    for i in range(k - 1):
        a = colors[i + 1]
        eid = eids[i]
        co[eid] = a
        miss_x[a] = eid
        missing[leaves[i]][a] = eid
    c.version += 1


def _path_edge_ids(c: PartialColoring, p: AlternatingPath) -> Tuple[int, ...]:
    if len(p.edge_ids) == len(p.vertices) - 1:
        return p.edge_ids
    ids = []
    for a, b in zip(p.vertices, p.vertices[1:]):
        eid = c.graph.edge_id(a, b)
        if eid is None:
            raise ValueError(f"path vertices {a},{b} are not adjacent")
        ids.append(eid)
    return tuple(ids)


def flip_path(c: PartialColoring, p: AlternatingPath) -> None:
    """Swap alpha and beta along a maximal alternating path.

    Rejects non-maximal paths: if either endpoint is not missing one of
    the two colors, flipping would break properness there.
    """
    s = len(p.vertices) - 1
    if s < 0:
        raise ValueError("path must contain at least one vertex")
    if s == 0:
        return
    if len(set(p.vertices)) != len(p.vertices):
        raise ValueError("path vertices must be distinct")
    if p.alpha == p.beta:
        raise ValueError("path colors must differ")
    eids = _path_edge_ids(c, p)
    co = c.color_of
    missing = c._missing_edge
    # The first edge may carry either color (a freshly flipped path starts
    # with the other one); flipping twice is then the identity.
    first = co[eids[0]]
    if first == p.alpha:
        a, b = p.alpha, p.beta
    elif first == p.beta:
        a, b = p.beta, p.alpha
    else:
        raise ValueError("path colors do not alternate under current coloring")
    for i, eid in enumerate(eids):
        expect = a if i % 2 == 0 else b
        if co[eid] != expect:
            raise ValueError("path colors do not alternate under current coloring")
    if missing[p.vertices[0]][b] != -1:
        raise ValueError("path not maximal at its start vertex")
    last = a if (s - 1) % 2 == 0 else b
    last_other = b if last == a else a
    if missing[p.vertices[-1]][last_other] != -1:
        raise ValueError("path not maximal at its end vertex")

    verts = p.vertices
    for i, eid in enumerate(eids):
        old = a if i % 2 == 0 else b
        missing[verts[i]][old] = -1
        missing[verts[i + 1]][old] = -1
        co[eid] = BLANK
    for i, eid in enumerate(eids):
        new = b if i % 2 == 0 else a
        co[eid] = new
        missing[verts[i]][new] = eid
        missing[verts[i + 1]][new] = eid
    c.version += 1


def augment(c: PartialColoring, chain: VizingChain, ell: int, rng) -> AugmentOutcome:
    """Apply one Vizing-chain augmentation, coloring exactly one blank edge.

    A path of exactly ``ell`` edges is truncated at a uniformly random
    point; the edge at the cut is uncolored and reported as flagged.
    The chain must have been built against the coloring's current state.
    """
    if chain.version != c.version:
        raise ValueError("stale chain: coloring mutated since construction")
    fan, path, alpha = chain.fan, chain.path, chain.alpha
    x = fan.pivot
    k = fan.length
    fan_eids = _fan_edge_ids(c, fan)
    s = path.length

    if s == 0:
        shift_fan(c, fan)
        c.set_color(fan_eids[k - 1], alpha)
        return AugmentOutcome(fan_eids[0], None, "happy")
    if s > ell:
        raise ValueError("path longer than cap")

    j = fan.leaves.index(path.vertices[1]) if path.vertices[1] in fan.leaves else -1
    if j < 1:
        raise ValueError("path does not start along a fan edge")

    flagged: Optional[int] = None
    path_eids = _path_edge_ids(c, path)
    if s == ell:
        lp = int(rng.integers(1, ell + 1))
        flagged = path_eids[lp - 1]
        c.unset_color(flagged)
        pprime = AlternatingPath(
            path.vertices[:lp], path.alpha, path.beta, path_eids[: lp - 1]
        )
        long_path = True
    else:
        pprime = path
        long_path = False

    flip_path(c, pprime)
    if pprime.vertices[-1] == fan.leaves[j - 1]:
        shift_fan(c, fan)
        c.set_color(fan_eids[k - 1], alpha)
        case = "long-k" if long_path else "short"
    else:
        fprime = Fan(x, fan.leaves[:j], fan_eids[:j])
        shift_fan(c, fprime)
        c.set_color(fan_eids[j - 1], alpha)
        case = "long-j" if long_path else "short"
    return AugmentOutcome(fan_eids[0], flagged, case)
