import pytest

from hopfarb import universe


@pytest.fixture(scope="session")
def u2():
    return universe(2)


@pytest.fixture(scope="session")
def u3():
    return universe(3)


@pytest.fixture(scope="session")
def u4():
    return universe(4)


@pytest.fixture(scope="session")
def u5():
    return universe(5)


@pytest.fixture(scope="session")
def u6():
    return universe(6)
