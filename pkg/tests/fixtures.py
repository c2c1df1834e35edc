"""Seeded generators for hedgehogs and hand-built decomposition inputs."""

from __future__ import annotations

import random

from oddwheel.graph import Graph, make_coloring


def random_hedgehog(rng: random.Random, x_range=(3, 12), w_max=20, outside_max=3):
    """A graph with a hedgehog (W, X) on shuffled labels plus random noise edges.

    Noise only touches pairs that are not already forced, so the hedgehog
    structure is exactly what the definition requires.
    """
    nx = rng.randint(*x_range)
    nw = rng.randint(nx, max(nx, w_max))
    n = nw + rng.randint(0, outside_max)
    labels = list(range(n))
    rng.shuffle(labels)
    w_set = labels[:nw]
    x_set = labels[:nx]
    edges = {(min(a, b), max(a, b)) for i, a in enumerate(x_set) for b in x_set[i + 1 :]}
    edges |= {(min(a, b), max(a, b)) for a in w_set[nx:] for b in x_set}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < 0.25:
                edges.add((u, v))
    return Graph.from_edges(n, edges), frozenset(w_set), frozenset(x_set)


def double_hedgehog(rng: random.Random, s_range=(3, 7), r_extra=3):
    """Two vertex-disjoint bare hedgehogs (R1, S1), (R2, S2) joined by two disjoint edges.

    Returns the graph and |S1| + |S2|.
    """
    sizes = []
    edges = set()
    blocks = []
    base = 0
    for _ in range(2):
        s = rng.randint(*s_range)
        r = s + rng.randint(0, r_extra)
        block = list(range(base, base + r))
        x_part = block[:s]
        edges |= {(a, b) for i, a in enumerate(x_part) for b in x_part[i + 1 :]}
        edges |= {(a, b) for b in block[s:] for a in x_part}
        blocks.append(block)
        sizes.append(s)
        base += r
    a1, a2 = rng.sample(blocks[0], 2)
    b1, b2 = rng.sample(blocks[1], 2)
    edges |= {(a1, b1), (a2, b2)}
    return Graph.from_edges(base, edges), sizes[0] + sizes[1]


def _cliques(*blocks):
    return [(x, y) for blk in blocks for i, x in enumerate(blk) for y in blk[i + 1 :]]


def star_crossing(c_size: int = 8, a: int = 10, b: int = 10):
    """A non-avoiding coloring that drives the decomposition into the red-star case.

    Red cliques C, A, B; p is red to A and to one vertex of B; q1, q2 (r1, r2)
    are red to C and to alternating halves of A (of B).
    """
    c_blk = list(range(c_size))
    a_blk = list(range(c_size, c_size + a))
    b_blk = list(range(c_size + a, c_size + a + b))
    p, q1, q2, r1, r2 = range(c_size + a + b, c_size + a + b + 5)
    red = _cliques(a_blk, b_blk, c_blk)
    red += [(p, v) for v in a_blk] + [(p, b_blk[0])]
    for q, half in ((q1, a_blk[::2]), (q2, a_blk[1::2]), (r1, b_blk[::2]), (r2, b_blk[1::2])):
        red += [(q, v) for v in half] + [(q, v) for v in c_blk]
    return make_coloring(r2 + 1, red)


def hub_separated(a: int = 9, t: int = 3, b: int = 12, r: int = 9):
    """A non-avoiding coloring whose red (W1, W2)-paths all pass through vertex 0.

    Red cliques A and B; vertex 0 is red to T and R; A is covered by red
    edges to T in round-robin order, B likewise by R.
    """
    n = 1 + a + t + b + r
    a_blk = list(range(1, 1 + a))
    t_blk = list(range(1 + a, 1 + a + t))
    b_blk = list(range(1 + a + t, 1 + a + t + b))
    r_blk = list(range(1 + a + t + b, n))
    red = _cliques(a_blk, b_blk)
    red += [(0, v) for v in t_blk + r_blk]
    for side, cover in ((a_blk, t_blk), (b_blk, r_blk)):
        red += [(v, cover[i % len(cover)]) for i, v in enumerate(side)]
    return make_coloring(n, red)


def greedy_leftover_fixture():
    """Ten vertices: red triangles on {0,1,2}, {3,4,5}, {6,7,8} (blue between) and
    vertex 9, blue to the second and third triangles, red to 0 only."""
    red = _cliques([0, 1, 2], [3, 4, 5], [6, 7, 8]) + [(0, 9)]
    return make_coloring(10, red)


def refine_fixture(s: int = 11, cross_edge: bool = False):
    """Three red s-cliques with blue between them, optionally one red edge
    between the second and third.  Blocks: W = 0..s-1, then W' = two cliques."""
    blocks = [list(range(i * s, (i + 1) * s)) for i in range(3)]
    red = _cliques(*blocks)
    if cross_edge:
        red.append((blocks[1][0], blocks[2][0]))
    return make_coloring(3 * s, red), blocks
