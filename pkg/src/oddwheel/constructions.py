"""Deterministic extremal colorings, the Brandt gadget, and a seeded mutator.

Vertex labels are laid out in contiguous ascending blocks so fixtures are
byte-stable across runs.
"""

from __future__ import annotations

import random

from .detect import Budget, Meter, Outcome, avoidance_check
from .errors import BadSize, BudgetExceeded, PreconditionViolated
from .graph import CompleteColoring, Graph, make_coloring

#: Generator used by the mutator: CPython's Mersenne Twister (random.Random).
GENERATOR = "python-random-mt19937"


def _blocks(sizes):
    start = 0
    out = []
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def _cliques(sizes):
    return [(u, v) for block in _blocks(sizes) for u in block for v in block if u < v]


def two_clique_coloring(m: int) -> CompleteColoring:
    """K_2m with red K_{m,m} between {0..m-1} and {m..2m-1}; blue is two K_m."""
    if m < 3:
        raise BadSize(f"two_clique_coloring needs m >= 3, got {m}")
    return make_coloring(2 * m, [(u, m + v) for u in range(m) for v in range(m)])


def three_clique_coloring(s1: int, s2: int, s3: int) -> CompleteColoring:
    """Three red cliques on consecutive blocks, complete blue 3-partite between them."""
    sizes = (s1, s2, s3)
    if min(sizes) < 1:
        raise BadSize(f"block sizes must be positive, got {sizes}")
    return make_coloring(sum(sizes), _cliques(sizes))


def nikiforov_two_clique(k: int) -> CompleteColoring:
    """K_4k with two red K_2k blocks and blue K_{2k,2k} between them."""
    if k < 2:
        raise BadSize(f"nikiforov_two_clique needs k >= 2, got {k}")
    return make_coloring(4 * k, _cliques((2 * k, 2 * k)))


def brandt_gadget(m: int) -> Graph:
    """Two K_{m,m} sharing one vertex plus one edge across, on n = 4m - 1 vertices.

    Block 1 is {0..2m-1} with sides {0..m-1} | {m..2m-1}; block 2 is
    {2m-1..4m-2} with sides {2m-1..3m-2} | {3m-1..4m-2}.  The shared vertex is
    2m-1, and the extra edge joins 0 to 3m-1, the lowest labels opposite it.
    """
    if m < 2:
        raise BadSize(f"brandt_gadget needs m >= 2, got {m}")
    left1, right1 = range(0, m), range(m, 2 * m)
    left2, right2 = range(2 * m - 1, 3 * m - 1), range(3 * m - 1, 4 * m - 1)
    edges = [(u, v) for u in left1 for v in right1]
    edges += [(u, v) for u in left2 for v in right2]
    edges.append((0, 3 * m - 1))
    return Graph.from_edges(4 * m - 1, edges)


def mutate_preserving_avoidance(
    c: CompleteColoring,
    k: int,
    flips: int,
    seed: int,
    budget: Budget | None = None,
) -> CompleteColoring:
    """Apply up to ``flips`` random single-pair recolorings that keep c avoiding
    a red C_{2k+1} and a blue W_{2k+1}.

    Every attempt draws its pair from the stream whether or not it is kept, so
    the stream position never depends on detection outcomes.
    """
    t = 2 * k + 1
    start = avoidance_check(c, t, t, budget)
    if start is Outcome.UNKNOWN:
        raise BudgetExceeded("could not certify the starting coloring")
    if start is not Outcome.OK:
        raise PreconditionViolated("starting coloring is not an avoidance coloring", start)
    rng = random.Random(seed)
    current = c
    for _ in range(flips):
        u, v = rng.sample(range(c.n), 2)
        candidate = current.flip(u, v)
        meter = Meter(budget)
        verdict = avoidance_check(candidate, t, t, meter=meter)
        if verdict is Outcome.UNKNOWN:
            raise BudgetExceeded(f"avoidance check on flip ({u}, {v}) ran out of budget", meter.spent)
        if verdict is Outcome.OK:
            current = candidate
    return current
