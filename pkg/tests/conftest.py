import pytest

from slicetree import _kernels, graph
from slicetree.generators import chorded_cycle, complete, cycle, theta, theta_chain, theta_ring
from slicetree.graph import Graph

graph.CHECK_INVARIANTS = True


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    with _kernels.use(request.param):
        yield request.param


# vertex ids: theta u=0 v=1 m1..m3=2..4; double theta u,v,w=0,1,2; triple chain u0..u3=0..3
@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def theta222():
    return theta(2, 2, 2)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c4_chord():
    return chorded_cycle(4, [(0, 2)])


@pytest.fixture
def double_theta():
    return theta_chain(2, 2)


@pytest.fixture
def triple_chain():
    return theta_chain(3, 2)


@pytest.fixture
def tripod():
    return theta_ring(3, 2)


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


_criteria: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(key, ok, detail)``."""

    def record(key, ok, detail):
        _criteria[key] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        ok, detail = _criteria[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
