import pytest

from factorlab.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def k13() -> Graph:
    return star_graph(3)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3)
