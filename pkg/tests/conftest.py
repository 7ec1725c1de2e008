import pytest

from eil.catalog import all_graphs


@pytest.fixture(scope="session")
def catalog5():
    return list(all_graphs(5))


@pytest.fixture(scope="session")
def catalog6():
    return list(all_graphs(6))


@pytest.fixture(scope="session")
def catalog7():
    return list(all_graphs(7))
