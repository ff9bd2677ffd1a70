import pytest
from hypothesis import strategies as st

from edgedim.graph import build_graph
from edgedim.verify import corpus


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(max_n=12)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus(max_n=99)


@st.composite
def connected_graphs(draw, min_n=3, max_n=9):
    """A random spanning tree (each vertex hooks onto an earlier one) plus random chords."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), max_size=4, unique=True)))
    perm = draw(st.permutations(range(n)))
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
