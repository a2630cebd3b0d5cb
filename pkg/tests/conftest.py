import random
import sys
from itertools import product

import pytest

from reflexive_mirror import hull_from_points, polar_dual
from reflexive_mirror.corpus import hand_built, load_corpus, random_unimodular

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
CUBE_PTS = list(product((-1, 1), repeat=3))
OCTA_PTS = [E1, E2, E3, (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
SIMPLEX_PTS = [E1, E2, E3, (-1, -1, -1)]
EXAMPLE_PTS = [E1, E2, E3, (-4, -4, -3)]


@pytest.fixture(scope="session")
def cube():
    return hull_from_points(CUBE_PTS)


@pytest.fixture(scope="session")
def octahedron():
    return hull_from_points(OCTA_PTS)


@pytest.fixture(scope="session")
def simplex():
    return hull_from_points(SIMPLEX_PTS)


@pytest.fixture(scope="session")
def example():
    return hull_from_points(EXAMPLE_PTS)


@pytest.fixture(scope="session")
def example_dual(example):
    return polar_dual(example)


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def named():
    return hand_built()


@pytest.fixture
def rng():
    return random.Random(20240611)


def transformed(P, rng, steps=6):
    return P.transform(random_unimodular(rng, steps=steps))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
