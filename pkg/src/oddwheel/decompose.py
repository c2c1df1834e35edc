"""Constructive stability partition for colorings with no red C_{2k+1} and no blue W_{2k+1}.

``stability_partition`` walks the same route as the existence argument:

1. find a blue wheel with a (2k+2)-rim,
2. split the rim into two red (k+1)-cliques joined in blue up to one vertex,
3. grow the split plus the hub into a greedily maximal blue-separated triple,
4. classify leftover vertices by which triple class they are all-red to,
5. hand the situation to ``two_clique_refine``, which reads off the final
   three red classes from a bipartite blue graph and deletes at most two
   star centers.

Every step is checked against the coloring.  Whenever a step the argument
rules out actually happens, a monochromatic witness is extracted from the
input and raised as InternalContradiction; the module never trusts the
argument silently.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .detect import (
    Budget,
    Meter,
    Outcome,
    _component,
    avoidance_check,
    find_wheel,
    max_disjoint_paths,
    verify_hedgehog,
)
from .errors import (
    BadSeed,
    BudgetExceeded,
    HypothesisViolated,
    InternalContradiction,
    NoSplit,
    NotAPartition,
    PreconditionViolated,
)
from .graph import CompleteColoring, CycleWitness, Partition, WheelWitness, bits, induced, to_mask

VertexSet = frozenset


class Branch(enum.Enum):
    NO_LEFTOVER = "NoLeftover"
    D2 = "D2"
    CASE_A = "CaseA"
    CASE_B_CONNECTED = "CaseB-connected"
    CASE_B_SPLIT = "CaseB-split"
    FINAL_DEGREE = "FinalDegree"


class Hypothesis(enum.Enum):
    D1 = "D1"
    D2 = "D2"


@dataclass(frozen=True)
class StabilityInput:
    coloring: CompleteColoring
    k: int

    def check(self, budget: Budget | None = None) -> None:
        """Raise PreconditionViolated unless k >= 6, 5k+3 <= n <= 6k and c avoids both targets."""
        n, k = self.coloring.n, self.k
        if k < 6:
            raise PreconditionViolated(f"k must be at least 6, got {k}")
        if not 5 * k + 3 <= n <= 6 * k:
            raise PreconditionViolated(f"n = {n} outside [5k+3, 6k] = [{5 * k + 3}, {6 * k}]")
        verdict = avoidance_check(self.coloring, 2 * k + 1, 2 * k + 1, budget)
        if verdict is Outcome.UNKNOWN:
            raise BudgetExceeded("avoidance precondition could not be settled")
        if verdict is not Outcome.OK:
            raise PreconditionViolated("coloring contains a forbidden monochromatic subgraph", verdict)


@dataclass(frozen=True)
class RefineRecord:
    w: VertexSet
    x: VertexSet
    w_prime: VertexSet
    x_prime: VertexSet
    hypothesis: Hypothesis
    extras: VertexSet
    y1: VertexSet = VertexSet()
    y2: VertexSet = VertexSet()
    removed: VertexSet = VertexSet()


@dataclass(frozen=True)
class DecompositionTrace:
    k: int
    wheel: WheelWitness
    rim_split: tuple[VertexSet, VertexSet, int]
    seeds: tuple[VertexSet, VertexSet, VertexSet]
    triple: tuple[VertexSet, VertexSet, VertexSet]
    w_classes: tuple[VertexSet, VertexSet, VertexSet]
    branch: Branch
    result: Partition
    refine: RefineRecord | None = None
    separator: VertexSet | None = None

    def to_json(self) -> dict:
        def s(x):
            return sorted(x)

        out = {
            "k": self.k,
            "find_wheel": self.wheel.to_json(),
            "rim_split": {"U1'": s(self.rim_split[0]), "U2'": s(self.rim_split[1]), "v": self.rim_split[2]},
            "seeds": [s(u) for u in self.seeds],
            "maximal_triple": [s(x) for x in self.triple],
            "classify_W": [s(w) for w in self.w_classes],
            "branch": self.branch.value,
            "result": self.result.to_json(),
        }
        if self.separator is not None:
            out["separator"] = s(self.separator)
        if self.refine is not None:
            r = self.refine
            out["two_clique_refine"] = {
                "W": s(r.w),
                "X": s(r.x),
                "W'": s(r.w_prime),
                "X'": s(r.x_prime),
                "hypothesis": r.hypothesis.value,
                "extras": s(r.extras),
                "Y1": s(r.y1),
                "Y2": s(r.y2),
                "V0": s(r.removed),
            }
        return out


# ---------------------------------------------------------------------------
# helpers


def _is_red_clique(c: CompleteColoring, vs) -> bool:
    m = to_mask(vs)
    return all((c.red_rows[v] | 1 << v) & m == m for v in vs)


def _all_blue(c: CompleteColoring, a, b) -> bool:
    bm = to_mask(b)
    return all(not c.red_rows[v] & bm for v in a)


def _all_red_to(c: CompleteColoring, v: int, vs) -> bool:
    m = to_mask(vs) & ~(1 << v)
    return c.red_rows[v] & m == m


def _first_blue_pair(c: CompleteColoring, vs):
    vs = sorted(vs)
    for i, u in enumerate(vs):
        for w in vs[i + 1:]:
            if not c.red_rows[u] >> w & 1:
                return (u, w)
    return None


def _contradiction(c: CompleteColoring, k: int, message: str, branch: Branch | None = None):
    """Raise InternalContradiction with a red C_{2k+1} or blue W_{2k+1} from ``c``."""
    name = branch.value if branch else None
    found = avoidance_check(c, 2 * k + 1, 2 * k + 1)
    if found is Outcome.OK:
        raise InternalContradiction(f"{message}; no monochromatic witness exists, so this is a bug", None, name)
    if found is Outcome.UNKNOWN:
        raise InternalContradiction(f"{message}; witness search ran out of budget", None, name)
    raise InternalContradiction(message, found, name)


# ---------------------------------------------------------------------------
# steps


def find_rim_split(rim: CompleteColoring) -> tuple[VertexSet, VertexSet, int]:
    """Split a (2k+2)-vertex coloring into red (k+1)-cliques U1', U2' and a vertex v
    such that every pair between U1' - v and U2' - v is blue."""
    size = rim.n
    if size % 2 or size < 4:
        raise NoSplit(f"rim must have an even number >= 4 of vertices, got {size}", rim)
    half = size // 2
    everyone = frozenset(range(size))
    for v in range(size):
        rest = everyone - {v}
        a = min(rest)
        side_a = frozenset({a} | {w for w in bits(rim.red_rows[a]) if w in rest})
        side_b = rest - side_a
        for u1, u2 in ((side_a | {v}, side_b), (side_a, side_b | {v})):
            if len(u1) != half or len(u2) != half:
                continue
            if not (_is_red_clique(rim, u1) and _is_red_clique(rim, u2)):
                continue
            if _all_blue(rim, u1 - {v}, u2 - {v}):
                return u1, u2, v
    raise NoSplit("no vertex splits the rim into two red cliques", rim)


def maximal_blue_triple(c: CompleteColoring, u1, u2, u3) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Grow (U1, U2, U3) greedily into pairwise blue-joined classes.

    Vertices are offered in ascending order to classes 1, 2, 3 in turn; a
    vertex joins the first class whose two partners it is all-blue to.  One
    sweep is enough because joining only adds constraints.
    """
    seeds = [set(u1), set(u2), set(u3)]
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if seeds[i] & seeds[j]:
            raise BadSeed(f"seed classes {i + 1} and {j + 1} overlap")
        if not _all_blue(c, seeds[i], seeds[j]):
            raise BadSeed(f"seed classes {i + 1} and {j + 1} are joined by a red edge")
    masks = [to_mask(s) for s in seeds]
    taken = masks[0] | masks[1] | masks[2]
    for v in range(c.n):
        if taken >> v & 1:
            continue
        red = c.red_rows[v]
        for i in range(3):
            if not red & (masks[(i + 1) % 3] | masks[(i + 2) % 3]):
                masks[i] |= 1 << v
                taken |= 1 << v
                break
    return tuple(frozenset(bits(m)) for m in masks)


def _greedy_additions(c: CompleteColoring, triple) -> list[int]:
    masks = [to_mask(x) for x in triple]
    taken = masks[0] | masks[1] | masks[2]
    out = []
    for v in range(c.n):
        if taken >> v & 1:
            continue
        for i in range(3):
            if not c.red_rows[v] & (masks[(i + 1) % 3] | masks[(i + 2) % 3]):
                out.append(v)
                break
    return out


def classify_W(c: CompleteColoring, x1, x2, x3, *, k: int | None = None) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Assign every vertex to the first X_i it is all-red to (X_i itself included)."""
    xs = (frozenset(x1), frozenset(x2), frozenset(x3))
    ws: list[set[int]] = [set(x) for x in xs]
    covered = xs[0] | xs[1] | xs[2]
    for v in range(c.n):
        if v in covered:
            continue
        for i in range(3):
            if _all_red_to(c, v, xs[i]):
                ws[i].add(v)
                break
        else:
            message = f"vertex {v} has a blue neighbor in every X_i"
            if k is None:
                raise InternalContradiction(message)
            _contradiction(c, k, message)
    return tuple(frozenset(w) for w in ws)


def _blue_components(c: CompleteColoring, vertices: VertexSet):
    """Connected components of the blue graph on ``vertices`` with their 2-colorings,
    or an odd blue cycle if that graph is not bipartite."""
    blue = c.blue.rows
    mask = to_mask(vertices)
    comps = []
    while mask:
        s = (mask & -mask).bit_length() - 1
        comp = _component(blue, mask, s)
        sides = [1 << s, 0]
        seen = layer = 1 << s
        depth = 0
        while layer:
            nxt = 0
            for x in bits(layer):
                if blue[x] & layer:
                    return None
                nxt |= blue[x]
            layer = nxt & comp & ~seen
            seen |= layer
            depth += 1
            sides[depth % 2] |= layer
        comps.append((frozenset(bits(sides[0])), frozenset(bits(sides[1]))))
        mask &= ~comp
    return comps


def _red_cross(c: CompleteColoring, classes) -> list[tuple[int, int]]:
    out = []
    for i, j in itertools.combinations(range(len(classes)), 2):
        bm = to_mask(classes[j])
        for u in sorted(classes[i]):
            for w in bits(c.red_rows[u] & bm):
                out.append((u, w))
    return out


def _no_two_disjoint(edges) -> bool:
    for (a, b), (x, y) in itertools.combinations(edges, 2):
        if len({a, b, x, y}) == 4:
            return False
    return True


def _assignments(comps, limit: int = 10):
    """Orientations of blue components; the first component keeps its orientation."""
    free = len(comps) - 1
    if free <= limit:
        for flips in itertools.product((0, 1), repeat=free):
            y1, y2 = set(comps[0][0]), set(comps[0][1])
            for (a, b), f in zip(comps[1:], flips):
                if f:
                    a, b = b, a
                y1 |= a
                y2 |= b
            yield frozenset(y1), frozenset(y2)
        return
    yield None


def two_clique_refine(
    c: CompleteColoring,
    w,
    x,
    w_prime,
    x_prime,
    hypothesis: Hypothesis,
    extras=(),
    *,
    k: int,
) -> tuple[Partition, RefineRecord]:
    """Partition V into V0 (|V0| <= 2) and three red classes, blue between them.

    W' is split along the bipartite blue graph it induces into two red classes
    Y1, Y2 with at most a star of red edges between them; W is the third
    class.  V0 is the extra (uncovered) vertex plus a smallest vertex cover of
    the red edges running between classes.
    """
    w, x, w_prime, x_prime = (frozenset(s) for s in (w, x, w_prime, x_prime))
    extras = frozenset(extras)
    everyone = frozenset(range(c.n))
    red = c.red
    if not (x <= w and len(x) >= k - 1 and verify_hedgehog(red, w, x)):
        raise HypothesisViolated("A", f"(W, X) is not a red hedgehog with |X| >= {k - 1}")
    if len(w_prime) < 3 * k + 2:
        raise HypothesisViolated("B", f"|W'| = {len(w_prime)} < 3k+2 = {3 * k + 2}")
    if not (x_prime <= w_prime and len(x_prime) >= k and _is_red_clique(c, x_prime)):
        raise HypothesisViolated("C", f"X' is not a red clique of size >= {k} inside W'", _first_blue_pair(c, x_prime))
    if w & w_prime or extras & (w | w_prime):
        raise HypothesisViolated("D", "W, W' and the extra vertices must be disjoint")
    if hypothesis is Hypothesis.D1:
        if len(extras) > 1 or w | w_prime | extras != everyone:
            raise HypothesisViolated("D1", "W and W' must cover all but at most one vertex")
        if not _all_blue(c, w, w_prime):
            raise HypothesisViolated("D1", "a red edge joins W and W'")
    else:
        if extras or w | w_prime != everyone:
            raise HypothesisViolated("D2", "W and W' must cover every vertex")
        outside = to_mask(everyone - w)
        if not any(not c.red_rows[v] & outside for v in w):
            raise HypothesisViolated("D2", "every vertex of W has a red neighbor outside W")

    comps = _blue_components(c, w_prime)
    if comps is None:
        _contradiction(c, k, "blue graph on W' is not bipartite")
    room = 2 - len(extras)
    candidates = []
    for assignment in _assignments(comps):
        if assignment is None:
            assignment = _greedy_assignment(c, comps)
        y1, y2 = assignment
        cross = _red_cross(c, (y1, y2))
        if not _no_two_disjoint(cross):
            continue
        candidates.append((len(cross), y1, y2))
    candidates.sort(key=lambda item: item[0])
    for _, y1, y2 in candidates:
        classes = (y1, y2, w)
        cover = _small_cover(_red_cross(c, classes), classes, room)
        if cover is None:
            continue
        removed = extras | cover
        parts = [cls - removed for cls in classes]
        if any(len(p) > 2 * k or not _is_red_clique(c, p) for p in parts):
            continue
        partition = Partition.of(c.n, [removed, *parts])
        record = RefineRecord(w, x, w_prime, x_prime, hypothesis, extras, y1, y2, removed)
        return partition, record
    _contradiction(c, k, "no split of W' into two red classes survives at most two deletions")


def _greedy_assignment(c: CompleteColoring, comps):
    y1, y2 = set(comps[0][0]), set(comps[0][1])
    for a, b in comps[1:]:
        keep = len(_red_cross(c, (y1 | a, y2 | b)))
        swap = len(_red_cross(c, (y1 | b, y2 | a)))
        if swap < keep:
            a, b = b, a
        y1 |= a
        y2 |= b
    return frozenset(y1), frozenset(y2)


def _small_cover(edges, classes, room: int) -> VertexSet | None:
    """Smallest vertex set of size <= room touching every edge.

    Candidates are ordered by class index, then label, so a lone red edge
    loses its endpoint in the lower-indexed class.
    """
    if not edges:
        return frozenset()
    rank = {}
    for i, cls in enumerate(classes):
        for v in cls:
            rank[v] = (i, v)
    pool = sorted({v for e in edges for v in e}, key=lambda v: rank[v])
    for size in range(1, room + 1):
        for combo in itertools.combinations(pool, size):
            chosen = set(combo)
            if all(a in chosen or b in chosen for a, b in edges):
                return frozenset(chosen)
    return None


# ---------------------------------------------------------------------------
# driver


def stability_partition(
    inp: StabilityInput,
    budget: Budget | None = None,
    *,
    check_precondition: bool = True,
) -> tuple[Partition, DecompositionTrace]:
    c, k = inp.coloring, inp.k
    if check_precondition:
        inp.check(budget)
    everyone = frozenset(range(c.n))

    wheel = find_wheel(c.blue, 2 * k + 2, meter=Meter(budget))
    if wheel is Outcome.UNKNOWN:
        raise BudgetExceeded("blue wheel search ran out of budget")
    if wheel is Outcome.ABSENT:
        _contradiction(c, k, f"no blue W_{2 * k + 2} although n >= 5k+3")

    rim_vertices = sorted(wheel.rim.vertices)
    rim, order = induced(c, rim_vertices)
    try:
        a_loc, b_loc, v_loc = find_rim_split(rim)
    except NoSplit:
        _contradiction(c, k, "the wheel rim admits no red clique split")
    part_a = frozenset(order[i] for i in a_loc)
    part_b = frozenset(order[i] for i in b_loc)
    v = order[v_loc]
    # the part holding v loses it and becomes U2
    if v in part_a:
        part_a, part_b = part_b, part_a
    u1, u2, u3 = part_a, part_b - {v}, frozenset({wheel.hub})

    triple = maximal_blue_triple(c, u1, u2, u3)
    for xi in triple:
        if len(xi) > 2 * k or not _is_red_clique(c, xi):
            _contradiction(c, k, "a class of the maximal triple is not a red clique of size <= 2k")

    def finish(branch, partition, w_classes, refine=None, separator=None):
        trace = DecompositionTrace(
            k, wheel, (part_a, part_b, v), (u1, u2, u3), triple, w_classes, branch, partition, refine, separator
        )
        report = verify_stability_partition(c, partition, k)
        if not report.passed:
            _contradiction(c, k, f"branch {branch.value} produced an invalid partition: {report.summary()}", branch)
        return partition, trace

    x1, x2, x3 = triple
    if x1 | x2 | x3 == everyone:
        partition = Partition.of(c.n, [(), x1, x2, x3])
        return finish(Branch.NO_LEFTOVER, partition, triple)

    ws = classify_W(c, x1, x2, x3, k=k)
    w1, w2, w3 = ws
    if len(w1) > 2 * k or len(w2) > 2 * k:
        _contradiction(c, k, "|W_1| or |W_2| exceeds 2k")

    def refine(branch, *args, separator=None, **kw):
        try:
            partition, record = two_clique_refine(c, *args, k=k, **kw)
        except HypothesisViolated as exc:
            _contradiction(c, k, f"branch {branch.value}: {exc}", branch)
        except InternalContradiction as exc:
            exc.branch = exc.branch or branch.value
            raise
        return finish(branch, partition, ws, record, separator)

    # D2: a vertex of W_i that is all-blue to the rest of the graph
    for i, (wi, xi, xo) in enumerate(((w1, x1, x2), (w2, x2, x1))):
        outside = to_mask(everyone - wi)
        if any(not c.red_rows[u] & outside for u in wi):
            return refine(Branch.D2, wi, xi, everyone - wi, xo, Hypothesis.D2)

    # Case A: red edges between W_1 and W_2 form a star
    star = [(a, b) for a in sorted(w1) for b in bits(c.red_rows[a] & to_mask(w2))]
    if star:
        if not _no_two_disjoint(star):
            _contradiction(c, k, "two disjoint red edges join W_1 and W_2", Branch.CASE_A)
        if len(star) == 1:
            centers = list(star[0])
        else:
            common = set(star[0]).intersection(*star[1:])
            centers = sorted(common)
        ws_x = ((w1, x1), (w2, x2))
        last = None
        for center in centers:
            i = 0 if center in w1 else 1
            (wi, xi), (wo, xo) = ws_x[i], ws_x[1 - i]
            try:
                partition, record = two_clique_refine(
                    c, wo, xo, everyone - wo - {center}, xi - {center}, Hypothesis.D1, {center}, k=k
                )
            except HypothesisViolated as exc:
                last = exc
                continue
            except InternalContradiction as exc:
                exc.branch = exc.branch or Branch.CASE_A.value
                raise
            return finish(Branch.CASE_A, partition, ws, record)
        _contradiction(c, k, f"Case A: no star center satisfies the refinement hypotheses ({last})", Branch.CASE_A)

    # Case B: E(W_1, W_2) is blue; a red separator of size one exists
    paths = max_disjoint_paths(c.red, w1, w2, cap=2)
    if paths.count >= 2:
        _contradiction(c, k, "two vertex-disjoint red (W_1, W_2)-paths")
    sep = paths.separator or frozenset()
    if len(sep) != 1 or not sep <= w3:
        _contradiction(c, k, f"red (W_1, W_2)-separator {sorted(sep)} is not a single vertex of W_3")
    (s,) = sep
    rest3 = w3 - {s}
    red_rows = c.red_rows
    rest_mask = to_mask(rest3)
    connected = bool(rest3) and _component(red_rows, rest_mask, min(rest3)) == rest_mask
    if connected:
        for wi, xi, wo, xo in ((w1, x1, w2, x2), (w2, x2, w1, x1)):
            if _all_blue(c, rest3, wi):
                return refine(
                    Branch.CASE_B_CONNECTED, wi, xi, (w3 | wo) - {s}, xo, Hypothesis.D1, {s}, separator=sep
                )
        _contradiction(c, k, "Case B: W_3 - s has red edges to both W_1 and W_2", Branch.CASE_B_CONNECTED)

    y1 = frozenset(u for u in rest3 if red_rows[u] & to_mask(w1))
    y2 = frozenset(u for u in rest3 if red_rows[u] & to_mask(w2))
    if y1 & y2 or y1 | y2 != rest3:
        _contradiction(c, k, "Case B: W_3 - s does not split by red neighbors", Branch.CASE_B_SPLIT)
    side1, side2 = (w1 | y1, x1), (w2 | y2, x2)
    small, big = (side1, side2) if len(side1[0]) <= len(side2[0]) else (side2, side1)
    if len(small[0]) > 2 * k:
        _contradiction(c, k, "Case B: both sides exceed 2k (final degree argument)", Branch.FINAL_DEGREE)
    return refine(Branch.CASE_B_SPLIT, small[0], small[1], big[0], big[1], Hypothesis.D1, {s}, separator=sep)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class StabilityReport:
    u0_ok: bool
    sizes_ok: bool
    violations: int
    first_violation: tuple[int, int] | None
    sizes: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.u0_ok and self.sizes_ok and self.violations == 0

    def summary(self) -> str:
        return (
            f"|U0|<=2: {self.u0_ok}, |Ui|<=2k: {self.sizes_ok}, "
            f"color violations: {self.violations} (first {self.first_violation}), sizes {self.sizes}"
        )

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "u0_ok": self.u0_ok,
            "sizes_ok": self.sizes_ok,
            "violations": self.violations,
            "first_violation": self.first_violation,
            "sizes": list(self.sizes),
        }


def verify_stability_partition(c: CompleteColoring, p: Partition, k: int) -> StabilityReport:
    if len(p.classes) != 4:
        raise NotAPartition("expected four classes U0..U3")
    Partition.of(c.n, p.classes, p.labels)
    u0 = p.classes[0]
    label = {}
    for i, cls in enumerate(p.classes[1:], start=1):
        for v in cls:
            label[v] = i
    violations = 0
    first = None
    live = sorted(label)
    for a_idx, u in enumerate(live):
        row = c.red_rows[u]
        for w in live[a_idx + 1:]:
            is_red = bool(row >> w & 1)
            if is_red != (label[u] == label[w]):
                violations += 1
                if first is None:
                    first = (u, w)
    sizes = tuple(len(cls) for cls in p.classes)
    return StabilityReport(len(u0) <= 2, all(s <= 2 * k for s in sizes[1:]), violations, first, sizes)


# ---------------------------------------------------------------------------
# audit


@dataclass(frozen=True)
class AuditEntry:
    name: str
    passed: bool
    detail: object = None


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __getitem__(self, name: str) -> AuditEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> list[dict]:
        return [{"name": e.name, "passed": e.passed, "detail": _jsonable(e.detail)} for e in self.entries]


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return [_jsonable(o) for o in obj]
    return obj


def lemma_audit(inp: StabilityInput, trace: DecompositionTrace) -> AuditReport:
    """Re-check the intermediate claims of the decomposition directly on the coloring."""
    c, k = inp.coloring, inp.k
    entries = []

    def add(name, ok, detail=None):
        entries.append(AuditEntry(name, bool(ok), None if ok else detail))

    w = trace.wheel
    add("wheel", w.validate(c.blue) and len(w.rim) == 2 * k + 2, w)

    a, b, v = trace.rim_split
    split_ok = (
        len(a) == len(b) == k + 1
        and v in a | b
        and a | b == frozenset(w.rim.vertices)
        and _is_red_clique(c, a)
        and _is_red_clique(c, b)
        and _all_blue(c, a - {v}, b - {v})
    )
    add("rim-split", split_ok, (a, b, v))

    x1, x2, x3 = trace.triple
    blue_between = all(_all_blue(c, p, q) for p, q in ((x1, x2), (x1, x3), (x2, x3)))
    seeded = all(u <= x for u, x in zip(trace.seeds, trace.triple))
    add("triple-blue-between", blue_between and seeded)
    extra = _greedy_additions(c, trace.triple)
    add("triple-maximal", not extra, extra)

    bad = [(i + 1, _first_blue_pair(c, x)) for i, x in enumerate(trace.triple) if not _is_red_clique(c, x)]
    add("X-red-inside", not bad, bad)

    w1, w2, w3 = trace.w_classes
    everyone = frozenset(range(c.n))
    disjoint = not (w1 & w2 or w1 & w3 or w2 & w3) and w1 | w2 | w3 == everyone
    hedgehogs = all(verify_hedgehog(c.red, wi, xi) for wi, xi in zip(trace.w_classes, trace.triple))
    add("W-partition", disjoint and hedgehogs)

    lonely = []
    for i, (wi, xi) in enumerate(zip(trace.w_classes, trace.triple)):
        others = to_mask(trace.triple[(i + 1) % 3] | trace.triple[(i + 2) % 3])
        lonely += [u for u in sorted(wi - xi) if not c.red_rows[u] & others]
    add("red-neighbor", not lonely, lonely)

    add("W-small", len(w1) <= 2 * k and len(w2) <= 2 * k, (len(w1), len(w2)))

    if w1 and w2 and not (w1 & w2):
        paths = max_disjoint_paths(c.red, w1, w2, cap=2)
        add("disjoint-paths", paths.count <= 1, paths.paths)
    else:
        add("disjoint-paths", False, "W_1 or W_2 empty or overlapping")

    report = verify_stability_partition(c, trace.result, k)
    add("partition", report.passed, report.summary())
    return AuditReport(tuple(entries))
