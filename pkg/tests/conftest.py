import os
import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from oddwheel.graph import Graph, make_coloring  # noqa: E402

settings.register_profile("default", max_examples=80, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def colorings(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    return make_coloring(g.n, g.edges())


@pytest.fixture(scope="session")
def k6():
    return 6


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
