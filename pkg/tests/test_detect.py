import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import graphs
from fixtures import double_hedgehog, random_hedgehog
from oddwheel.constructions import brandt_gadget, three_clique_coloring, two_clique_coloring
from oddwheel.detect import (
    Budget,
    Outcome,
    avoidance_check,
    circumference,
    cycle_spectrum,
    find_cycle,
    find_path,
    find_wheel,
    girth,
    hedgehog_path,
    is_bipartite,
    is_pancyclic,
    is_two_connected,
    is_weakly_pancyclic,
    max_disjoint_paths,
    verify_hedgehog,
)
from oddwheel.errors import BadLength, LengthOutOfRange, NotHedgehog, NotSubset, Overlap, TooSmall
from oddwheel.graph import Bipartition, Color, CycleWitness, Graph, Monochromatic, make_coloring


def complete_coloring(n, color):
    pairs = list(itertools.combinations(range(n), 2))
    return make_coloring(n, pairs if color is Color.RED else [])


# find_cycle / find_wheel ---------------------------------------------------


def test_find_cycle_examples():
    w = find_cycle(Graph.cycle(5), 5)
    assert isinstance(w, CycleWitness) and sorted(w.vertices) == [0, 1, 2, 3, 4]
    assert find_cycle(Graph.complete(4), 5) is Outcome.ABSENT
    assert find_cycle(Graph.petersen(), 7) is Outcome.ABSENT
    assert not oracles.has_cycle(oracles.graph_adjacency(Graph.petersen()), 7)
    with pytest.raises(BadLength):
        find_cycle(Graph.cycle(5), 2)


def test_find_wheel_examples():
    w = find_wheel(Graph.complete(5), 4)
    assert w.validate(Graph.complete(5))
    assert find_wheel(Graph.complete_bipartite(4, 5), 4) is Outcome.ABSENT
    assert find_wheel(Graph.complete_bipartite(6, 6), 3) is Outcome.ABSENT
    assert find_wheel(three_clique_coloring(4, 4, 4).blue, 5) is Outcome.ABSENT
    with pytest.raises(BadLength):
        find_wheel(Graph.complete(5), 2)


def test_budget_exhaustion_is_unknown():
    assert find_cycle(Graph.petersen(), 7, Budget(max_nodes=5)) is Outcome.UNKNOWN
    assert find_wheel(Graph.complete_bipartite(6, 6), 4, Budget(max_nodes=1)) in (Outcome.UNKNOWN, Outcome.ABSENT)
    with pytest.raises(ValueError):
        Budget(max_nodes=0)


@given(graphs(max_n=7), st.integers(3, 7))
def test_find_cycle_matches_oracle(g, t):
    found = find_cycle(g, t)
    expected = oracles.has_cycle(oracles.graph_adjacency(g), t)
    assert (found is not Outcome.ABSENT) == expected
    if expected:
        assert found.validate(g) and len(found) == t


def test_find_cycle_exhaustive_small_graphs():
    """Every graph on up to 5 vertices, every length."""
    for n in range(3, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            g = Graph.from_edges(n, edges)
            adj = oracles.adjacency(n, edges)
            for t in range(3, n + 1):
                assert (find_cycle(g, t) is not Outcome.ABSENT) == oracles.has_cycle(adj, t)


@given(graphs(max_n=7), st.integers(3, 5))
def test_find_wheel_matches_oracle(g, m):
    found = find_wheel(g, m)
    assert (found is not Outcome.ABSENT) == oracles.has_wheel(oracles.graph_adjacency(g), m)
    if found is not Outcome.ABSENT:
        assert found.validate(g)


@given(graphs(min_n=2, max_n=7), st.data())
def test_find_path_matches_oracle(g, data):
    a, b = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    length = data.draw(st.integers(1, g.n - 1))
    found = find_path(g, a, b, length)
    adj = oracles.graph_adjacency(g)
    expected = any(len(p) == length + 1 for p in oracles.ab_paths(adj, {a}, {b}))
    assert (found is not Outcome.ABSENT) == expected
    if expected:
        assert found.validate(g) and found.length == length and found.vertices[0] == a


def test_find_path_rejects():
    with pytest.raises(LengthOutOfRange):
        find_path(Graph.path(3), 0, 0, 2)


# spectrum, girth, circumference -------------------------------------------


def test_spectrum_examples():
    rep = cycle_spectrum(Graph.complete(5))
    assert rep.present == {3, 4, 5} and rep.exhaustive
    assert cycle_spectrum(Graph.cycle(6)).present == {6}
    gadget = cycle_spectrum(brandt_gadget(3))
    assert not {t for t in gadget.present if t % 2 == 0 and t > 6}
    empty = cycle_spectrum(Graph.path(5))
    assert empty.present == frozenset() and empty.circumference == 0 and empty.girth is None


def test_girth_circumference_examples():
    assert girth(Graph.petersen()) == 5
    tree = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert girth(tree) == math.inf and circumference(tree) == 0
    assert girth(Graph.complete(7)) == 3 and circumference(Graph.complete(7)) == 7


@given(graphs(max_n=7))
def test_spectrum_matches_oracle(g):
    adj = oracles.graph_adjacency(g)
    expected = oracles.spectrum(adj)
    rep = cycle_spectrum(g)
    assert rep.exhaustive and rep.present == expected
    assert girth(g) == (min(expected) if expected else math.inf)
    assert circumference(g) == (max(expected) if expected else 0)


def test_circumference_budget_reports_lower_bound():
    from oddwheel.errors import BudgetExceeded

    with pytest.raises(BudgetExceeded) as info:
        circumference(Graph.petersen(), Budget(max_nodes=3))
    assert info.value.lower_bound == 5


def test_pancyclicity_examples():
    assert is_pancyclic(Graph.complete(6)) is True
    assert is_weakly_pancyclic(Graph.cycle(8)) is True
    assert is_pancyclic(Graph.cycle(8)) is False
    assert is_weakly_pancyclic(brandt_gadget(3)) is False
    with pytest.raises(TooSmall):
        is_pancyclic(Graph.path(2))


@given(graphs(min_n=3, max_n=7))
def test_pancyclic_definitions(g):
    lengths = oracles.spectrum(oracles.graph_adjacency(g))
    assert is_pancyclic(g) == (lengths == set(range(3, g.n + 1)))
    weak = not lengths or lengths == set(range(min(lengths), max(lengths) + 1))
    assert is_weakly_pancyclic(g) == weak


# bipartite / connectivity / disjoint paths --------------------------------


def test_bipartite_examples():
    parts = is_bipartite(Graph.complete_bipartite(3, 3))
    assert isinstance(parts, Bipartition) and sorted(map(len, parts.parts)) == [3, 3]
    odd = is_bipartite(Graph.cycle(5))
    assert isinstance(odd, CycleWitness) and len(odd) == 5 and odd.validate(Graph.cycle(5))
    empty = is_bipartite(Graph.from_edges(4, []))
    assert empty.parts[0] == frozenset(range(4)) and empty.parts[1] == frozenset()


@given(graphs(max_n=8))
def test_bipartite_matches_oracle(g):
    adj = oracles.graph_adjacency(g)
    odd = any(oracles.has_cycle(adj, t) for t in range(3, g.n + 1, 2))
    result = is_bipartite(g)
    if odd:
        assert isinstance(result, CycleWitness) and len(result) % 2 == 1 and result.validate(g)
    else:
        assert isinstance(result, Bipartition) and result.validate(g)
        seen = set()
        for v in range(g.n):
            if v in seen:
                continue
            # v is the least vertex of its component
            assert v in result.parts[0]
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for y in adj[x] - seen:
                    seen.add(y)
                    stack.append(y)


def test_two_connected_examples():
    assert is_two_connected(Graph.cycle(4))
    p4 = is_two_connected(Graph.path(4))
    assert not p4 and p4.separator.vertices <= {1, 2} and len(p4.separator.vertices) == 1
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    res = is_two_connected(bowtie)
    assert not res and res.separator.vertices == {2}
    with pytest.raises(TooSmall):
        is_two_connected(Graph.path(2))


@given(graphs(min_n=3, max_n=8))
def test_two_connected_matches_oracle(g):
    res = is_two_connected(g)
    assert bool(res) == oracles.two_connected(oracles.graph_adjacency(g))
    if not res:
        assert len(res.separator.vertices) <= 1
        assert not oracles.connected(oracles.graph_adjacency(g), res.separator.vertices)


def test_disjoint_paths_examples():
    one = max_disjoint_paths(Graph.path(3), {0}, {2})
    assert one.count == 1 and one.paths[0].vertices == (0, 1, 2)
    k22 = max_disjoint_paths(Graph.complete_bipartite(2, 2), {0, 1}, {2, 3})
    assert k22.count == 2
    apart = max_disjoint_paths(Graph.from_edges(4, [(0, 1), (2, 3)]), {0}, {2})
    assert apart.count == 0 and apart.separator == frozenset()
    with pytest.raises(Overlap):
        max_disjoint_paths(Graph.path(3), {0, 1}, {1})


@given(graphs(min_n=2, max_n=8), st.data())
def test_disjoint_paths_match_oracle(g, data):
    labels = data.draw(st.permutations(range(g.n)))
    na = data.draw(st.integers(1, g.n - 1))
    nb = data.draw(st.integers(1, g.n - na))
    a_set, b_set = set(labels[:na]), set(labels[na : na + nb])
    cap = data.draw(st.sampled_from([1, 2]))
    res = max_disjoint_paths(g, a_set, b_set, cap)
    adj = oracles.graph_adjacency(g)
    assert res.count == oracles.max_disjoint_ab_paths(adj, a_set, b_set, cap)
    used = set()
    for p in res.paths:
        assert p.validate(g) and p.vertices[0] in a_set and p.vertices[-1] in b_set
        assert not set(p.vertices[1:-1]) & (a_set | b_set)
        assert not used & set(p.vertices)
        used |= set(p.vertices)
    if res.count < cap:
        sep = res.separator
        assert len(sep) == res.count
        keep = [v for v in range(g.n) if v not in sep]
        sub = [set(adj[v]) - sep if v in keep else set() for v in range(g.n)]
        assert not oracles.ab_paths(sub, a_set - sep, b_set - sep)


# hedgehogs -----------------------------------------------------------------


def test_verify_hedgehog_examples():
    k4 = Graph.complete(4)
    assert verify_hedgehog(k4, {0, 1, 2}, {0, 1, 2})
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert verify_hedgehog(star, {0, 1, 2, 3}, {0})
    assert not verify_hedgehog(Graph.from_edges(3, []), {0, 1}, {0, 1})
    with pytest.raises(NotSubset):
        verify_hedgehog(k4, {0}, {0, 1})


def test_hedgehog_path_examples():
    k4 = Graph.complete(4)
    p = hedgehog_path(k4, range(4), range(4), 0, 3, 2)
    assert p.length == 2 and p.vertices[0] == 0 and p.vertices[-1] == 3
    assert hedgehog_path(k4, range(4), range(4), 0, 3, 3).length == 3
    with pytest.raises(LengthOutOfRange):
        hedgehog_path(k4, range(4), range(4), 0, 3, 4)
    with pytest.raises(NotHedgehog):
        hedgehog_path(Graph.cycle(4), range(4), range(4), 0, 2, 2)


def test_hedgehog_path_outside_endpoints():
    """Endpoints in W minus X, |X| = 5, length 4; the oracle confirms such a path exists."""
    x_set = range(5)
    edges = [(a, b) for a, b in itertools.combinations(x_set, 2)]
    edges += [(w, x) for w in (5, 6) for x in x_set]
    g = Graph.from_edges(7, edges)
    assert any(len(p) == 5 for p in oracles.ab_paths(oracles.graph_adjacency(g), {5}, {6}))
    p = hedgehog_path(g, range(7), x_set, 5, 6, 4)
    assert p.validate(g) and p.length == 4 and set(p.vertices[1:-1]) <= set(x_set)


@pytest.mark.parametrize("seed", range(20))
def test_hedgehog_paths_every_length(seed):
    rng = random.Random(seed)
    g, w_set, x_set = random_hedgehog(rng, x_range=(3, 8), w_max=10)
    assert verify_hedgehog(g, w_set, x_set)
    for u, v in itertools.permutations(sorted(w_set), 2):
        for length in range(2, len(x_set)):
            p = hedgehog_path(g, w_set, x_set, u, v, length)
            assert p.validate(g) and p.length == length
            assert (p.vertices[0], p.vertices[-1]) == (u, v)
            assert set(p.vertices[1:-1]) <= x_set


@pytest.mark.parametrize("seed", range(10))
def test_double_hedgehog_spectrum(seed):
    g, top = double_hedgehog(random.Random(seed))
    present = cycle_spectrum(g).present
    assert set(range(6, top + 1)) <= present


# avoidance -----------------------------------------------------------------


def test_avoidance_examples():
    assert avoidance_check(two_clique_coloring(6), 5, 6) is Outcome.OK
    red = avoidance_check(complete_coloring(7, Color.RED), 7, 3)
    assert isinstance(red, Monochromatic) and red.color is Color.RED
    assert red.validate(complete_coloring(7, Color.RED)) and len(red.witness) == 7
    blue = avoidance_check(complete_coloring(8, Color.BLUE), 3, 6)
    assert blue.color is Color.BLUE and blue.validate(complete_coloring(8, Color.BLUE))


def test_avoidance_unknown_on_tiny_budget():
    petersen = make_coloring(10, Graph.petersen().edges())
    assert avoidance_check(petersen, 7, 9, Budget(max_nodes=5)) is Outcome.UNKNOWN


@given(graphs(max_n=7), st.integers(3, 5), st.integers(3, 4))
def test_avoidance_matches_oracle(g, t, m):
    c = make_coloring(g.n, g.edges())
    res = avoidance_check(c, t, m)
    red_hit = oracles.has_cycle(oracles.graph_adjacency(c.red), t)
    blue_hit = oracles.has_wheel(oracles.graph_adjacency(c.blue), m)
    if red_hit:
        assert res.color is Color.RED and res.validate(c)
    elif blue_hit:
        assert res.color is Color.BLUE and res.validate(c)
    else:
        assert res is Outcome.OK
