import pytest

from dtcolor.graphs import Graph, family
from dtcolor.colorings import TotalColoring
from dtcolor.bounds import SolveCache


@pytest.fixture(scope="session")
def c5():
    return family("cycle", 5)


@pytest.fixture(scope="session")
def ring_fixture(c5):
    """The published 5-cycle coloring: ring edges colored 1..5 in ring order,
    vertices colored 4,5,1,2,3.

    Ring edges in lexicographic edge order: (0,1)=1, (0,4)=5, (1,2)=2,
    (2,3)=3, (3,4)=4.
    """
    return TotalColoring(graph=c5, k=5,
                         vertex_colors=(4, 5, 1, 2, 3),
                         edge_colors=(1, 5, 2, 3, 4))


@pytest.fixture(scope="session")
def cache():
    return SolveCache()
