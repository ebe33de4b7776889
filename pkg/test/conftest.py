import math

import pytest

from exclugraph.graph_core import FamilyKind, FamilySpec, Graph, generate_family


def family(kind: str, n: int, distances=()) -> Graph:
    return generate_family(FamilySpec(kind=FamilyKind(kind), n=n, distances=list(distances)))


def odd_cycle_theta(n: int) -> float:
    c = math.cos(math.pi / n)
    return n * c / (1 + c)


@pytest.fixture
def c5():
    return family("cycle", 5)


@pytest.fixture
def c4():
    return family("cycle", 4)


@pytest.fixture
def p3():
    return family("path", 3)


@pytest.fixture
def p4():
    return family("path", 4)


@pytest.fixture
def petersen():
    return family("petersen", 10)


@pytest.fixture
def chsh():
    return family("circulant", 8, (1, 4))


@pytest.fixture
def k4():
    return family("complete", 4)


@pytest.fixture
def make_family():
    return family
