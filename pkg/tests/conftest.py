import random
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from kgline.graph import build_graph, build_hypergraph

# exact solvers make single examples slow on a loaded machine
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_vertices=1, max_vertices=7, min_edges=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))
                  if pairs else st.just([]))
    return build_graph(n, chosen)


@st.composite
def hypergraphs(draw, max_vertices=5, max_size=3, min_edges=0):
    n = draw(st.integers(1, max_vertices))
    subsets = [c for k in range(1, max_size + 1) for c in combinations(range(n), k)]
    chosen = draw(st.lists(st.sampled_from(subsets), unique=True, min_size=min_edges,
                           max_size=8))
    return build_hypergraph(n, chosen)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
