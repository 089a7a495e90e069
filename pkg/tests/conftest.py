import pytest

from cactus_center.graph import build_graph
from cactus_center.model import Instance, Location, UncertainPoint


def point(weight, locs, constant=0.0):
    return UncertainPoint(weight, tuple(Location(p, f) for p, f in locs), constant)


@pytest.fixture
def fixture_a():
    """Triangle, unit edges; one point split half/half between v0 and v1."""
    g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)])
    return Instance(g, (point(1.0, [(0, 0.5), (1, 0.5)]),))


@pytest.fixture
def fixture_b():
    """Square cycle, unit edges; one point split between the antipodal v0 and v2."""
    g = build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
    return Instance(g, (point(1.0, [(0, 0.5), (2, 0.5)]),))


@pytest.fixture
def fixture_c():
    """Path 0-1-2, unit edges; deterministic points at both ends."""
    g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
    return Instance(g, (point(1.0, [(0, 1.0)]), point(1.0, [(2, 1.0)])))


@pytest.fixture
def fixture_d():
    """Unit triangle 0-1-2 plus pendant edge (0,3) of length 2; P1 at v3, P2 at v1."""
    g = build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (0, 3, 2.0)])
    return Instance(g, (point(1.0, [(3, 1.0)]), point(1.0, [(1, 1.0)])))
