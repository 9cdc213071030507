import pytest

from socle.instancefile import parse_poly
from socle.linalg import GF101
from socle.modules import from_presentation, rmatrix_from_polys
from socle.ring import ring_from_strings
from socle.theorems import agp_example


def cyclic(ring, polystrs):
    """R modulo the ideal generated by the listed elements."""
    rows = [[parse_poly(s, ring.varnames) for s in polystrs]]
    return from_presentation(ring, rmatrix_from_polys(ring, rows))


def module_from_rows(ring, rows):
    grid = [[parse_poly(s, ring.varnames) for s in row] for row in rows]
    return from_presentation(ring, rmatrix_from_polys(ring, grid))


@pytest.fixture(scope="session")
def chain3():
    return ring_from_strings(GF101, ["x"], ["x^3"])


@pytest.fixture(scope="session")
def gor():
    """k[x,y]/(x^2, y^2): Gorenstein, length 4."""
    return ring_from_strings(GF101, ["x", "y"], ["x^2", "y^2"])


@pytest.fixture(scope="session")
def flat():
    """k[x,y]/(x^2, xy, y^2): m^2 = 0, type 2."""
    return ring_from_strings(GF101, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="session")
def gor3():
    """k[x,y]/(x^2 - y^2, xy): Gorenstein with m^3 = 0, m^2 != 0."""
    return ring_from_strings(GF101, ["x", "y"], ["x^2 - y^2", "x*y"])


@pytest.fixture(scope="session")
def agp():
    """The rank-two periodic instance: (ring, M = coker phi)."""
    return agp_example()
