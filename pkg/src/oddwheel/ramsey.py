"""Bounded arrowing search, tabulated Ramsey values, and admissible-pair bounds."""

from __future__ import annotations

import enum
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import constructions
from .detect import Budget, Meter, Outcome, _Exhausted, cycle_spectrum, find_cycle, find_wheel, is_two_connected
from .errors import BadParams, NotCovered
from .graph import Color, CompleteColoring, Graph, Monochromatic, bits


class Kind(enum.Enum):
    CYCLE = "cycle"
    WHEEL = "wheel"


@dataclass(frozen=True)
class Target:
    kind: Kind
    size: int

    def __post_init__(self):
        if self.size < 3:
            raise BadParams(f"target size must be at least 3, got {self.size}")

    @classmethod
    def parse(cls, text: str) -> "Target":
        """Parse ``cycle:<t>`` or ``wheel:<m>``."""
        kind, _, size = text.partition(":")
        try:
            return cls(Kind(kind.strip().lower()), int(size))
        except ValueError as exc:
            raise BadParams(f"bad target {text!r}; expected cycle:<t> or wheel:<m>") from exc

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.size}"

    @property
    def order(self) -> int:
        return self.size + (self.kind is Kind.WHEEL)


def cycle(t: int) -> Target:
    return Target(Kind.CYCLE, t)


def wheel(m: int) -> Target:
    return Target(Kind.WHEEL, m)


def find_target(g: Graph, target: Target, budget: Budget | None = None, *, meter: Meter | None = None):
    if target.kind is Kind.CYCLE:
        return find_cycle(g, target.size, budget, meter=meter)
    return find_wheel(g, target.size, budget, meter=meter)


def target_check(c: CompleteColoring, red: Target, blue: Target, budget: Budget | None = None):
    """Like detect.avoidance_check but for arbitrary cycle/wheel targets."""
    meter = Meter(budget)
    for color, target in ((Color.RED, red), (Color.BLUE, blue)):
        found = find_target(c.graph(color), target, meter=meter)
        if found is Outcome.UNKNOWN:
            return found
        if found is not Outcome.ABSENT:
            return Monochromatic(color, found)
    return Outcome.OK


# ---------------------------------------------------------------------------
# arrowing search


class VerdictKind(enum.Enum):
    ARROWS = "arrows"
    COUNTEREXAMPLE = "counterexample"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    coloring: CompleteColoring | None = None
    nodes: int = 0

    def to_json(self) -> dict:
        from .serialize import coloring_to_doc

        return {
            "verdict": self.kind.value,
            "coloring": None if self.coloring is None else coloring_to_doc(self.coloring),
            "nodes": self.nodes,
        }


def _path(adj, a: int, b: int, length: int, allowed: int) -> bool:
    """Simple a-b path with ``length`` edges, interior drawn from ``allowed``."""
    if length == 1:
        return bool(adj[a] >> b & 1)
    cand = adj[a] & allowed
    while cand:
        low = cand & -cand
        cand ^= low
        w = low.bit_length() - 1
        if _path(adj, w, b, length - 1, allowed & ~low):
            return True
    return False


def _cycle_through(adj, u: int, v: int, t: int, allowed: int) -> bool:
    return _path(adj, u, v, t - 1, allowed & ~(1 << u) & ~(1 << v))


def _rim_through_vertex(adj, hub: int, v: int, m: int) -> bool:
    ring = adj[hub]
    for x in bits(adj[v] & ring):
        if _path(adj, v, x, m - 1, ring & ~(1 << v) & ~(1 << x)):
            return True
    return False


def _completes(adj, target: Target, u: int, v: int) -> bool:
    """Does the edge uv (already in adj) lie on a copy of ``target``?"""
    if target.kind is Kind.CYCLE:
        return _cycle_through(adj, u, v, target.size, -1)
    m = target.size
    if _rim_through_vertex(adj, u, v, m) or _rim_through_vertex(adj, v, u, m):
        return True
    for hub in bits(adj[u] & adj[v]):
        if _cycle_through(adj, u, v, m, adj[hub]):
            return True
    return False


class _Search:
    def __init__(self, n: int, red: Target, blue: Target, meter: Meter, symmetry: bool, incremental: bool):
        self.n = n
        self.targets = (red, blue)
        self.meter = meter
        self.symmetry = symmetry
        self.incremental = incremental
        # vertex-addition order keeps every decided edge inside a growing K_v
        self.edges = [(u, v) for v in range(1, n) for u in range(v)]
        self.rows = ([0] * n, [0] * n)
        self.found: CompleteColoring | None = None

    def allowed(self, u: int, v: int) -> tuple[int, ...]:
        # colors in branch order; index 0 is red, 1 is blue
        if self.symmetry and u == 0 and v >= 2 and self.rows[0][0] >> (v - 1) & 1:
            return (0,)
        return (0, 1)

    def hits(self, color: int, u: int, v: int) -> bool:
        target = self.targets[color]
        adj = self.rows[color]
        if self.incremental:
            return _completes(adj, target, u, v)
        g = Graph(self.n, tuple(adj))
        return find_target(g, target) is not Outcome.ABSENT

    def assign(self, color: int, u: int, v: int) -> None:
        adj = self.rows[color]
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u

    def solve(self, i: int = 0) -> bool:
        """True as soon as a complete avoiding coloring is found."""
        if i == len(self.edges):
            self.found = CompleteColoring(self.n, tuple(self.rows[0]))
            return True
        u, v = self.edges[i]
        for color in self.allowed(u, v):
            self.meter.tick()
            self.assign(color, u, v)
            if not self.hits(color, u, v) and self.solve(i + 1):
                return True
            self.assign(color, u, v)
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All pruning-consistent color assignments of the first ``depth`` edges."""
        out: list[tuple[int, ...]] = []

        def walk(i: int, acc: tuple[int, ...]) -> None:
            if i == depth:
                out.append(acc)
                return
            u, v = self.edges[i]
            for color in self.allowed(u, v):
                self.assign(color, u, v)
                if not self.hits(color, u, v):
                    walk(i + 1, acc + (color,))
                self.assign(color, u, v)

        walk(0, ())
        return out

    def replay(self, prefix: tuple[int, ...]) -> None:
        for (u, v), color in zip(self.edges, prefix):
            self.assign(color, u, v)


def _verify_counterexample(c: CompleteColoring, red: Target, blue: Target) -> None:
    check = target_check(c, red, blue)
    if check is not Outcome.OK:
        raise AssertionError(f"search produced a coloring that fails its own targets: {check}")


def _solve_prefix(args) -> tuple[str | None, int, bool]:
    n, red, blue, prefix, max_nodes, symmetry, incremental = args
    meter = Meter(Budget(max_nodes=max_nodes))
    search = _Search(n, red, blue, meter, symmetry, incremental)
    search.replay(prefix)
    try:
        search.solve(len(prefix))
    except _Exhausted:
        return None, meter.spent, False
    doc = None
    if search.found is not None:
        from .serialize import dump_coloring

        doc = dump_coloring(search.found)
    return doc, meter.spent, True


def arrows(
    n: int,
    red: Target,
    blue: Target,
    budget: Budget | None = None,
    *,
    symmetry: bool = True,
    incremental: bool = True,
    threads: int = 1,
) -> Verdict:
    """Decide whether every red/blue coloring of K_n has a red ``red`` or a blue ``blue``.

    Depth-first over edge colors (red first) in vertex-addition order, with
    an incremental through-edge check after every assignment.  With
    ``symmetry`` the row of vertex 0 is forced to be a blue block followed by
    a red block, which every coloring satisfies after relabeling 1..n-1.
    """
    if n < 1:
        raise BadParams("n must be positive")
    budget = budget or Budget()
    if threads > 1 and n >= 4:
        return _parallel_arrows(n, red, blue, budget, symmetry, incremental, threads)
    meter = Meter(budget)
    search = _Search(n, red, blue, meter, symmetry, incremental)
    try:
        search.solve()
    except _Exhausted:
        return Verdict(VerdictKind.UNKNOWN, None, meter.spent)
    if search.found is None:
        return Verdict(VerdictKind.ARROWS, None, meter.spent)
    _verify_counterexample(search.found, red, blue)
    return Verdict(VerdictKind.COUNTEREXAMPLE, search.found, meter.spent)


def _parallel_arrows(n, red, blue, budget, symmetry, incremental, threads) -> Verdict:
    from .serialize import parse_coloring

    splitter = _Search(n, red, blue, Meter(budget), symmetry, incremental)
    depth = min(len(splitter.edges), 6)
    prefixes = splitter.prefixes(depth)
    if not prefixes:
        return Verdict(VerdictKind.ARROWS, None, 0)
    share = max(1, budget.max_nodes // len(prefixes))
    jobs = [(n, red, blue, p, share, symmetry, incremental) for p in prefixes]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_solve_prefix, jobs))
    spent = sum(r[1] for r in results)
    docs = sorted(r[0] for r in results if r[0] is not None)
    if docs:
        found = parse_coloring(docs[0])
        _verify_counterexample(found, red, blue)
        return Verdict(VerdictKind.COUNTEREXAMPLE, found, spent)
    if not all(r[2] for r in results):
        return Verdict(VerdictKind.UNKNOWN, None, spent)
    return Verdict(VerdictKind.ARROWS, None, spent)


# ---------------------------------------------------------------------------
# tabulated values


def _cycle_cycle(n: int, m: int) -> int | None:
    if m > n:
        n, m = m, n
    if (n, m) in ((3, 3), (4, 4)):
        return 6
    if m % 2 == 1:
        return 2 * n - 1
    if n % 2 == 0:
        return n + m // 2 - 1 if m >= 4 else None
    return max(n + m // 2 - 1, 2 * m - 1)


def _cycle_wheel(n: int, m: int) -> int | None:
    odd_n, odd_m = n % 2 == 1, m % 2 == 1
    if not odd_m and m >= 4 and 2 * n >= 3 * m - 2:
        return 2 * n - 1
    if odd_m and n >= m >= 3 and (n, m) != (3, 3):
        return 3 * n - 2
    if odd_n and 2 * m >= 3 * (n - 1) and (n, m) not in ((3, 3), (3, 4)):
        return 2 * m + 1
    if odd_n and odd_m and n < m and 2 * m <= 3 * (n - 1):
        return 3 * n - 2
    return None


def known_value(red: Target, blue: Target) -> int:
    """Tabulated r(red, blue) for cycle/cycle and cycle/wheel pairs.

    Raises NotCovered outside the table, notably for odd n, even m with
    n < m < 3(n-1)/2.
    """
    value = None
    if red.kind is Kind.CYCLE and blue.kind is Kind.CYCLE:
        value = _cycle_cycle(red.size, blue.size)
    elif red.kind is Kind.CYCLE and blue.kind is Kind.WHEEL:
        value = _cycle_wheel(red.size, blue.size)
    if value is None:
        raise NotCovered(f"no tabulated value for r({red}, {blue})")
    return value


# ---------------------------------------------------------------------------
# admissible pairs


@dataclass(frozen=True)
class AdmissiblePair:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        alpha, beta = Fraction(self.alpha), Fraction(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if not Fraction(1, 4) <= alpha < 1:
            raise BadParams(f"alpha must lie in [1/4, 1), got {alpha}")
        if beta <= 0:
            raise BadParams(f"beta must be positive, got {beta}")

    def degree_bound(self, n: int) -> int:
        return math.ceil(self.alpha * n + self.beta)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


BRANDT_THIRD = AdmissiblePair(Fraction(1, 3), Fraction(2, 3))
BRANDT_QUARTER = AdmissiblePair(Fraction(1, 4), Fraction(250))


def admissible_bound(pair: AdmissiblePair, j: int) -> int:
    """floor((3j + beta) / (1 - alpha)), computed exactly."""
    if j < 4:
        raise BadParams(f"j must be at least 4, got {j}")
    return math.floor((3 * j + pair.beta) / (1 - pair.alpha))


@dataclass
class SizeReport:
    n: int
    degree_bound: int
    vacuous: bool
    samples: int = 0
    attempts: int = 0
    violations: list[dict] = field(default_factory=list)
    undecided: int = 0


@dataclass
class ScanReport:
    pair: AdmissiblePair
    seed: int
    generator: str
    sizes: list[SizeReport]

    @property
    def violations(self) -> int:
        return sum(len(s.violations) for s in self.sizes)

    @property
    def vacuous_sizes(self) -> list[int]:
        return [s.n for s in self.sizes if s.vacuous]

    def to_json(self) -> dict:
        return {
            "alpha": str(self.pair.alpha),
            "beta": str(self.pair.beta),
            "seed": self.seed,
            "generator": self.generator,
            "violations": self.violations,
            "vacuous_sizes": self.vacuous_sizes,
            "sizes": [s.__dict__ for s in self.sizes],
        }


def _random_graph(n: int, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.getrandbits(1)]
    return Graph.from_edges(n, edges)


def admissible_pair_scan(
    pair: AdmissiblePair,
    n_range: tuple[int, int],
    samples: int,
    seed: int,
    budget: Budget | None = None,
    *,
    max_attempts: int | None = None,
) -> ScanReport:
    """Sample 2-connected non-bipartite graphs with min degree >= ceil(alpha n + beta)
    and check that each contains every cycle length from 6 to its circumference.

    Graphs are G(n, 1/2) (uniform over edge sets) conditioned by rejection.
    Sizes whose degree bound exceeds n - 1 are reported vacuous.
    """
    lo, hi = n_range
    if not 3 <= lo <= hi <= 14:
        raise BadParams("n_range must lie within [3, 14]")
    from .detect import is_bipartite
    from .graph import Bipartition

    rng = random.Random(seed)
    reports = []
    for n in range(lo, hi + 1):
        bound = pair.degree_bound(n)
        rep = SizeReport(n, bound, bound > n - 1)
        if rep.vacuous:
            reports.append(rep)
            continue
        limit = max_attempts if max_attempts is not None else 2000 * samples
        while rep.samples < samples and rep.attempts < limit:
            rep.attempts += 1
            g = _random_graph(n, rng)
            if g.min_degree() < bound or not is_two_connected(g):
                continue
            if isinstance(is_bipartite(g), Bipartition):
                continue
            rep.samples += 1
            spectrum = cycle_spectrum(g, budget)
            if not spectrum.exhaustive:
                rep.undecided += 1
                continue
            missing = [t for t in range(6, spectrum.circumference + 1) if t not in spectrum.present]
            if missing:
                rep.violations.append({"edges": g.edges(), "missing": missing})
        reports.append(rep)
    return ScanReport(pair, seed, constructions.GENERATOR, reports)


# ---------------------------------------------------------------------------
# lower-bound witnesses


def ramsey_lower_bound_witness(red: Target, blue: Target) -> tuple[int, CompleteColoring]:
    """A coloring of K_N avoiding both targets, certifying r(red, blue) > N.

    Among the applicable constructions the largest N is returned.
    """
    options: list[CompleteColoring] = []
    if red.kind is Kind.CYCLE and red.size % 2 == 1:
        t = red.size
        if blue.kind is Kind.WHEEL:
            options.append(constructions.two_clique_coloring(blue.size))
            if blue.size == t and t >= 5:
                s = t - 1
                options.append(constructions.three_clique_coloring(s, s, s))
        elif blue.kind is Kind.CYCLE and blue.size == t and t >= 5:
            options.append(constructions.nikiforov_two_clique((t - 1) // 2))
    if not options:
        raise NotCovered(f"no construction for r({red}, {blue})")
    best = max(options, key=lambda c: c.n)
    return best.n, best
