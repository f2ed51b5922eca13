import pytest

from gsep import fixture_path
from gsep.linalg import IntMatrix, read_matrix
from gsep.matroid import from_matrix, read_graph

RUNNING = [
    [1, 0, 0, -1, 1],
    [0, 1, 0, -1, 1],
    [0, 0, 1, -1, 0],
]


@pytest.fixture
def running():
    return from_matrix(IntMatrix.from_rows(RUNNING))


@pytest.fixture
def u23_pair():
    return (
        from_matrix(read_matrix(fixture_path("u23-m1.mat"))),
        from_matrix(read_matrix(fixture_path("u23-m2.mat"))),
    )


@pytest.fixture
def whitney():
    return (
        read_graph(fixture_path("whitney-g.graph")),
        read_graph(fixture_path("whitney-h.graph")),
        read_matrix(fixture_path("whitney-f.mat")),
    )
