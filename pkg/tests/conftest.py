import pytest

from dqg.nfcore import Algebra


@pytest.fixture(scope="session")
def alg2():
    return Algebra(2)


@pytest.fixture(scope="session")
def alg3():
    return Algebra(3)


@pytest.fixture(scope="session")
def F2(alg2):
    return alg2.field


@pytest.fixture(scope="session")
def F3(alg3):
    return alg3.field
