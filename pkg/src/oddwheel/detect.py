"""Exact detection of cycles, wheels, paths and structural properties.

Every positive answer comes with a witness that re-validates against the
input graph.  Negative answers are only given after an exhaustive search;
when the node budget runs out the caller gets ``Outcome.UNKNOWN`` instead.

The cycle search anchors every cycle at its minimum label, extends along
ascending neighbor labels, and prunes with

* biconnected blocks (a cycle lives inside one block, which must have at
  least ``t`` vertices and, for odd ``t``, must not be bipartite),
* twin classes (vertices with identical open or closed neighborhoods are
  interchangeable, so only the smallest unused one of a class is tried),
* a BFS reachability bound back to the anchor.

The twin rule is what keeps clique-heavy colorings cheap: a red K_12 is a
single class, so paths through it are enumerated once instead of 11! times.
"""

from __future__ import annotations

import enum
import math
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    BadLength,
    LengthOutOfRange,
    NotHedgehog,
    NotSubset,
    OutOfRange,
    Overlap,
    TooSmall,
)
from .graph import (
    Bipartition,
    Color,
    CompleteColoring,
    CycleWitness,
    Graph,
    Monochromatic,
    PathWitness,
    Separator,
    WheelWitness,
    bits,
    to_mask,
)


class Outcome(enum.Enum):
    ABSENT = "absent"
    UNKNOWN = "unknown"
    OK = "ok"


@dataclass(frozen=True)
class Budget:
    """Search limit: one node is one attempted vertex extension."""

    max_nodes: int = 50_000_000
    wall_millis: int | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")


class _Exhausted(Exception):
    pass


class Meter:
    """Mutable node counter shared by every search that draws on one Budget."""

    __slots__ = ("limit", "spent", "deadline")

    def __init__(self, budget: Budget | None = None):
        budget = budget or Budget()
        self.limit = budget.max_nodes
        self.spent = 0
        self.deadline = None
        if budget.wall_millis is not None:
            self.deadline = time.monotonic() + budget.wall_millis / 1000

    def tick(self) -> None:
        self.spent += 1
        if self.spent > self.limit:
            raise _Exhausted
        if self.deadline is not None and not self.spent & 0x3FF and time.monotonic() > self.deadline:
            raise _Exhausted


# ---------------------------------------------------------------------------
# bitset kernels; ``adj`` is a sequence of row masks, ``mask`` the live vertices


def _component(adj, mask: int, s: int) -> int:
    seen = frontier = 1 << s
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def _components(adj, mask: int) -> list[int]:
    out = []
    while mask:
        s = (mask & -mask).bit_length() - 1
        comp = _component(adj, mask, s)
        out.append(comp)
        mask &= ~comp
    return out


def _two_core(adj, mask: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in bits(mask):
            if (adj[v] & mask).bit_count() < 2:
                mask &= ~(1 << v)
                changed = True
    return mask


def _is_bipartite(adj, mask: int) -> bool:
    for comp in _components(adj, mask):
        s = (comp & -comp).bit_length() - 1
        seen = layer = 1 << s
        while layer:
            nxt = 0
            for x in bits(layer):
                if adj[x] & layer:
                    return False
                nxt |= adj[x]
            layer = nxt & comp & ~seen
            seen |= layer
    return True


def _blocks(adj, mask: int) -> list[int]:
    """Vertex masks of the biconnected components of G[mask] (bridges included)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[int] = []
    counter = 0
    for root in bits(mask):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        vstack = [root]
        stack = [[root, -1, adj[root] & mask]]
        while stack:
            frame = stack[-1]
            v, parent, rest = frame
            if rest:
                lowbit = rest & -rest
                frame[2] = rest ^ lowbit
                w = lowbit.bit_length() - 1
                if w == parent:
                    continue
                if w in index:
                    if index[w] < low[v]:
                        low[v] = index[w]
                else:
                    index[w] = low[w] = counter
                    counter += 1
                    vstack.append(w)
                    stack.append([w, v, adj[w] & mask])
            else:
                stack.pop()
                if parent < 0:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= index[parent]:
                    block = 1 << parent
                    while True:
                        x = vstack.pop()
                        block |= 1 << x
                        if x == v:
                            break
                    out.append(block)
    return out


def _cyclic_blocks(adj, mask: int) -> list[int]:
    """Blocks of G[mask] that contain a cycle."""
    return [b for b in _blocks(adj, _two_core(adj, mask)) if b.bit_count() >= 3]


def _cycle_support(adj, mask: int, t: int) -> list[int]:
    """Blocks of G[mask] that could host a t-cycle."""
    return [
        b
        for b in _cyclic_blocks(adj, mask)
        if b.bit_count() >= t and not (t & 1 and _is_bipartite(adj, b))
    ]


def _twin_masks(adj, mask: int) -> dict[int, int]:
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in bits(mask):
        nb = adj[v] & mask
        open_groups[nb] = open_groups.get(nb, 0) | 1 << v
        key = nb | 1 << v
        closed_groups[key] = closed_groups.get(key, 0) | 1 << v
    return {v: open_groups[adj[v] & mask] | closed_groups[(adj[v] & mask) | 1 << v] for v in bits(mask)}


def _can_close(adj, free: int, w: int, target: int, need: int) -> bool:
    """Is there room for ``need`` more free vertices after ``w``, ending in ``target``?"""
    frontier = 1 << w
    seen = 0
    depth = 0
    hit = 0
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        nxt &= free & ~seen
        if not nxt:
            return False
        depth += 1
        seen |= nxt
        if not hit and nxt & target:
            hit = depth
        if hit:
            if seen.bit_count() >= need:
                return True
        elif depth >= need:
            return False
        frontier = nxt
    return False


def _anchored_cycle(adj, block: int, s: int, t: int, meter: Meter) -> list[int] | None:
    twins = _twin_masks(adj, block)
    close_to = adj[s] & block
    path = [s]

    def extend(v: int, used: int, placed: int) -> bool:
        need = t - placed - 1
        cand = adj[v] & block & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            meter.tick()
            if twins[w] & ~used & (low - 1):
                continue
            if need == 0:
                if close_to & low:
                    path.append(w)
                    return True
                continue
            now = used | low
            free = block & ~now
            if not adj[w] & free:
                continue
            if need == 1:
                if not adj[w] & free & close_to:
                    continue
            elif not _can_close(adj, free, w, close_to & free, need):
                continue
            path.append(w)
            if extend(w, now, placed + 1):
                return True
            path.pop()
        return False

    return path if extend(s, 1 << s, 1) else None


def _cycle_in(adj, mask: int, t: int, meter: Meter) -> list[int] | None:
    """First t-cycle of G[mask] in anchor order, or None after exhaustive search."""
    live = 0
    for block in _cycle_support(adj, mask, t):
        live |= block
    remaining = live
    for s in bits(live):
        if remaining.bit_count() < t:
            break
        core = _two_core(adj, remaining)
        if core >> s & 1:
            comp = _component(adj, core, s)
            if comp.bit_count() >= t:
                for block in _blocks(adj, comp):
                    if not block >> s & 1 or block.bit_count() < t:
                        continue
                    if t & 1 and _is_bipartite(adj, block):
                        continue
                    found = _anchored_cycle(adj, block, s, t, meter)
                    if found:
                        return found
        remaining &= ~(1 << s)
    return None


def _path_in(adj, mask: int, a: int, b: int, length: int, meter: Meter) -> list[int] | None:
    """Simple a-b path with exactly ``length`` edges whose interior lies in ``mask``."""
    if length == 1:
        return [a, b] if adj[a] >> b & 1 else None
    interior = mask & ~(1 << a) & ~(1 << b)
    target = adj[b] & interior
    path = [a]

    def extend(v: int, used: int, placed: int) -> bool:
        need = length - placed  # interior vertices still missing, counting the next one
        cand = adj[v] & interior & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            meter.tick()
            if need == 1:
                if target & low:
                    path.append(w)
                    return True
                continue
            now = used | low
            free = interior & ~now
            if not _can_close(adj, free, w, target & free, need - 1):
                continue
            path.append(w)
            if extend(w, now, placed + 1):
                return True
            path.pop()
        return False

    if extend(a, 1 << a, 1):
        return path + [b]
    return None


def _run(search, *args):
    try:
        return search(*args)
    except _Exhausted:
        return Outcome.UNKNOWN


# ---------------------------------------------------------------------------
# public operations


def find_cycle(g: Graph, t: int, budget: Budget | None = None, *, meter: Meter | None = None):
    """Return a CycleWitness of length ``t``, ``Outcome.ABSENT`` or ``Outcome.UNKNOWN``."""
    if t < 3:
        raise BadLength(f"cycle length must be at least 3, got {t}")
    meter = meter or Meter(budget)
    found = _run(_cycle_in, g.rows, (1 << g.n) - 1, t, meter)
    if found is Outcome.UNKNOWN:
        return found
    return CycleWitness(tuple(found)) if found else Outcome.ABSENT


def find_wheel(g: Graph, m: int, budget: Budget | None = None, *, meter: Meter | None = None):
    """Return a WheelWitness with rim length ``m``, ``Outcome.ABSENT`` or ``Outcome.UNKNOWN``.

    Hubs are tried in ascending order; the rim is a cycle in G[N(hub)].
    """
    if m < 3:
        raise BadLength(f"wheel rim must be at least 3, got {m}")
    meter = meter or Meter(budget)
    try:
        for hub in range(g.n):
            nbrs = g.rows[hub]
            if nbrs.bit_count() < m:
                continue
            rim = _cycle_in(g.rows, nbrs, m, meter)
            if rim:
                return WheelWitness(hub, CycleWitness(tuple(rim)))
    except _Exhausted:
        return Outcome.UNKNOWN
    return Outcome.ABSENT


def find_path(g: Graph, a: int, b: int, length: int, budget: Budget | None = None, *, within: Iterable[int] | None = None):
    """Simple (a, b)-path with exactly ``length`` edges, interior restricted to ``within``."""
    if a == b or length < 1:
        raise LengthOutOfRange("need distinct endpoints and positive length")
    mask = (1 << g.n) - 1 if within is None else to_mask(within)
    found = _run(_path_in, g.rows, mask, a, b, length, Meter(budget))
    if found is Outcome.UNKNOWN:
        return found
    return PathWitness(tuple(found)) if found else Outcome.ABSENT


@dataclass(frozen=True)
class SpectrumReport:
    present: frozenset[int]
    exhaustive: bool

    @property
    def girth(self) -> int | None:
        return min(self.present) if self.present else None

    @property
    def circumference(self) -> int:
        return max(self.present) if self.present else 0

    def to_json(self) -> dict:
        return {
            "present": sorted(self.present),
            "girth": self.girth,
            "circumference": self.circumference,
            "exhaustive": self.exhaustive,
        }


def cycle_spectrum(g: Graph, budget: Budget | None = None) -> SpectrumReport:
    meter = Meter(budget)
    full = (1 << g.n) - 1
    blocks = _cyclic_blocks(g.rows, full)
    if not blocks:
        return SpectrumReport(frozenset(), True)
    biggest = max(b.bit_count() for b in blocks)
    odd_possible = any(not _is_bipartite(g.rows, b) for b in blocks)
    present = set()
    try:
        for t in range(3, biggest + 1):
            if t & 1 and not odd_possible:
                continue
            if _cycle_in(g.rows, full, t, meter):
                present.add(t)
    except _Exhausted:
        return SpectrumReport(frozenset(present), False)
    return SpectrumReport(frozenset(present), True)


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests), by BFS from every root."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in bits(g.rows[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def circumference(g: Graph, budget: Budget | None = None) -> int:
    """Length of a longest cycle, 0 when acyclic.

    Raises BudgetExceeded (with ``lower_bound``) if the descending search is cut.
    """
    from .errors import BudgetExceeded

    meter = Meter(budget)
    full = (1 << g.n) - 1
    blocks = _cyclic_blocks(g.rows, full)
    if not blocks:
        return 0
    odd_possible = any(not _is_bipartite(g.rows, b) for b in blocks)
    biggest = max(b.bit_count() for b in blocks)
    try:
        for t in range(biggest, 2, -1):
            if t & 1 and not odd_possible:
                continue
            if _cycle_in(g.rows, full, t, meter):
                return t
    except _Exhausted:
        shortest = girth(g)
        err = BudgetExceeded("circumference search cut short", meter.spent)
        err.lower_bound = 0 if shortest == math.inf else int(shortest)
        raise err
    return 0


def is_pancyclic(g: Graph, budget: Budget | None = None):
    """True/False, or ``Outcome.UNKNOWN`` if some length could not be settled."""
    if g.n < 3:
        raise TooSmall("pancyclicity needs n >= 3")
    meter = Meter(budget)
    unknown = False
    for t in range(3, g.n + 1):
        found = _run(_cycle_in, g.rows, (1 << g.n) - 1, t, meter)
        if found is Outcome.UNKNOWN:
            unknown = True
            meter = Meter(budget)
        elif not found:
            return False
    return Outcome.UNKNOWN if unknown else True


def is_weakly_pancyclic(g: Graph, budget: Budget | None = None):
    if g.n < 3:
        raise TooSmall("weak pancyclicity needs n >= 3")
    report = cycle_spectrum(g, budget)
    if not report.present:
        return True if report.exhaustive else Outcome.UNKNOWN
    lo, hi = report.girth, report.circumference
    if not report.exhaustive:
        return Outcome.UNKNOWN
    return all(t in report.present for t in range(lo, hi + 1))


def is_bipartite(g: Graph) -> Bipartition | CycleWitness:
    """Two-color each component from its minimum vertex, or return an odd cycle."""
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in bits(g.rows[x]):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif side[y] == side[x]:
                    return CycleWitness(tuple(_tree_cycle(parent, depth, x, y)))
    zero = frozenset(v for v in range(g.n) if side[v] == 0)
    return Bipartition((zero, frozenset(range(g.n)) - zero))


def _tree_cycle(parent, depth, x: int, y: int) -> list[int]:
    left, right = [x], [y]
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    return left + right[::-1]


@dataclass(frozen=True)
class TwoConnectivity:
    two_connected: bool
    separator: Separator | None = None

    def __bool__(self) -> bool:
        return self.two_connected


def is_two_connected(g: Graph) -> TwoConnectivity:
    if g.n < 3:
        raise TooSmall("2-connectivity needs n >= 3")
    full = (1 << g.n) - 1
    if _component(g.rows, full, 0) != full:
        return TwoConnectivity(False, Separator(frozenset()))
    for v in range(g.n):
        rest = full & ~(1 << v)
        s = (rest & -rest).bit_length() - 1
        if _component(g.rows, rest, s) != rest:
            return TwoConnectivity(False, Separator(frozenset({v})))
    return TwoConnectivity(True)


@dataclass(frozen=True)
class DisjointPaths:
    count: int
    paths: tuple[PathWitness, ...]
    separator: frozenset[int] | None = None


def max_disjoint_paths(g: Graph, a_set: Iterable[int], b_set: Iterable[int], cap: int = 2) -> DisjointPaths:
    """Up to ``cap`` vertex-disjoint (A, B)-paths by unit-capacity augmentation.

    Interior vertices avoid A and B.  When fewer than ``cap`` paths exist a
    vertex separator of that size is returned as well.
    """
    a_set, b_set = frozenset(a_set), frozenset(b_set)
    if a_set & b_set:
        raise Overlap(f"A and B share {sorted(a_set & b_set)}")
    if not a_set or not b_set:
        raise ValueError("A and B must be nonempty")
    if cap < 1:
        raise ValueError("cap must be positive")
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    capacity: dict[tuple[int, int], int] = {}
    arcs: dict[int, set[int]] = {i: set() for i in range(2 * n + 2)}

    def arc(x: int, y: int, c: int = 1) -> None:
        capacity[(x, y)] = c
        arcs[x].add(y)
        arcs[y].add(x)

    # vertex v splits into v_in = 2v and v_out = 2v + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1)
    for a in a_set:
        arc(src, 2 * a)
    for b in b_set:
        arc(2 * b + 1, snk)
    for u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            # paths leave A immediately and stop at the first B vertex
            if y in a_set or x in b_set:
                continue
            arc(2 * x + 1, 2 * y, n + 1)
    flow: dict[tuple[int, int], int] = {}

    def residual(x: int, y: int) -> int:
        return capacity.get((x, y), 0) - flow.get((x, y), 0) + flow.get((y, x), 0)

    def reachable(stop_at_sink: bool) -> dict[int, int]:
        prev = {src: src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in sorted(arcs[x]):
                if y not in prev and residual(x, y) > 0:
                    prev[y] = x
                    if stop_at_sink and y == snk:
                        return prev
                    queue.append(y)
        return prev

    count = 0
    while count < cap:
        prev = reachable(True)
        if snk not in prev:
            break
        y = snk
        while y != src:
            x = prev[y]
            back = min(flow.get((y, x), 0), 1)
            if back:
                flow[(y, x)] -= 1
            else:
                flow[(x, y)] = flow.get((x, y), 0) + 1
            y = x
        count += 1

    carried = {key for key, f in flow.items() if f > 0}
    paths = []
    for start in sorted(y for (x, y) in carried if x == src):
        walk = [start // 2]
        node = start + 1
        while True:
            nxt = next(y for y in sorted(arcs[node]) if (node, y) in carried)
            if nxt == snk:
                break
            walk.append(nxt // 2)
            node = nxt + 1
        paths.append(PathWitness(tuple(walk)))
    separator = None
    if count < cap:
        reach = reachable(False)
        cut = {v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach}
        cut |= {a for a in a_set if 2 * a not in reach}
        cut |= {b for b in b_set if 2 * b + 1 in reach}
        separator = frozenset(cut)
    return DisjointPaths(count, tuple(paths), separator)


def verify_hedgehog(g: Graph, w_set: Iterable[int], x_set: Iterable[int]) -> bool:
    w_set, x_set = frozenset(w_set), frozenset(x_set)
    if not x_set <= w_set:
        raise NotSubset("X must be a subset of W")
    xm = to_mask(x_set)
    for x in x_set:
        if (g.rows[x] | 1 << x) & xm != xm:
            return False
    return all(g.rows[w] & xm == xm for w in w_set - x_set)


def hedgehog_path(g: Graph, w_set: Iterable[int], x_set: Iterable[int], u: int, v: int, length: int) -> PathWitness:
    """A (u, v)-path of exactly ``length`` edges whose interior lies in X.

    Interior vertices are taken in ascending order from X minus the endpoints;
    the clique on X and the complete join W\\X -- X make every choice valid.
    """
    w_set, x_set = frozenset(w_set), frozenset(x_set)
    if not verify_hedgehog(g, w_set, x_set):
        raise NotHedgehog("(W, X) is not a hedgehog in this graph")
    if u == v or u not in w_set or v not in w_set:
        raise OutOfRange("endpoints must be distinct vertices of W")
    if len(x_set) < 3 or not 2 <= length <= len(x_set) - 1:
        raise LengthOutOfRange(f"length must lie in [2, |X|-1] = [2, {len(x_set) - 1}]")
    pool = sorted(x_set - {u, v})
    interior = pool[: length - 1]
    path = PathWitness((u, *interior, v))
    if not path.validate(g):
        raise NotHedgehog("constructed path failed validation")
    return path


def avoidance_check(
    c: CompleteColoring,
    red_cycle: int,
    blue_wheel: int,
    budget: Budget | None = None,
    *,
    meter: Meter | None = None,
):
    """``Outcome.OK`` when c has no red C_{red_cycle} and no blue W_{blue_wheel}.

    Otherwise the first witness found (red is checked first) wrapped in
    Monochromatic, or ``Outcome.UNKNOWN`` if the budget ran out.
    """
    meter = meter or Meter(budget)
    cyc = find_cycle(c.red, red_cycle, meter=meter)
    if cyc is Outcome.UNKNOWN:
        return cyc
    if cyc is not Outcome.ABSENT:
        return Monochromatic(Color.RED, cyc)
    wheel = find_wheel(c.blue, blue_wheel, meter=meter)
    if wheel is Outcome.UNKNOWN:
        return wheel
    if wheel is not Outcome.ABSENT:
        return Monochromatic(Color.BLUE, wheel)
    return Outcome.OK
