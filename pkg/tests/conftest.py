import pytest

from bei.graph import complete_graph, cycle_graph, path_graph, star_graph
from helpers import graph


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def g_prime():
    """Edges {1,2},{1,3}: isomorphic to a path but not closed as labeled."""
    return graph((1, 2), (1, 3))


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def triangle_with_pendants():
    """Triangle a=1, b=2, c=3 with pendants x=4, y=5, z=6: chordal, claw-free, not closed."""
    return graph((1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6))


@pytest.fixture
def k3():
    return complete_graph(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
