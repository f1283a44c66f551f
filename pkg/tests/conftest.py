import pytest

from commrep import INF, ExtRep
from commrep.commutator import example


@pytest.fixture(scope="session")
def div52():
    return example("div52")[0]


@pytest.fixture(scope="session")
def rep_g(div52):
    return example("div52")[1]


@pytest.fixture(scope="session")
def known_g2(div52):
    pts = [
        ((0, 0), "52"),
        ((10, 20), "26"),
        ((30, 5), "4"),
        ((30, 20), "2"),
        ((9, INF), "52"),
        ((29, 19), "52"),
        ((29, INF), "26"),
        ((INF, 4), "52"),
        ((INF, 19), "4"),
        ((INF, INF), "2"),
    ]
    return ExtRep(div52, 2, pts)


@pytest.fixture(scope="session")
def chain3():
    return example("B")[0]


@pytest.fixture(scope="session")
def rep_b():
    return example("B")[1]


@pytest.fixture(scope="session")
def rep_b7():
    return example("B7")[1]


@pytest.fixture(scope="session")
def known_h(chain3):
    pts = [
        ((0, 0, 2), "alpha"),
        ((0, 1, 1), "0"),
        ((0, 2, 0), "0"),
        ((1, 0, 0), "0"),
        ((0, 1, 0), "alpha"),
        ((0, 0, 1), "1"),
        ((0, 0, INF), "alpha"),
        ((INF, INF, INF), "0"),
    ]
    return ExtRep(chain3, 3, pts)
