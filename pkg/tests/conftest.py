import pytest

from fqzeta import PrimePower, make_field


@pytest.fixture(scope="session")
def q2():
    return PrimePower(2, 1)


@pytest.fixture(scope="session")
def q3():
    return PrimePower(3, 1)


@pytest.fixture(scope="session")
def q4():
    return PrimePower(2, 2)


@pytest.fixture(scope="session")
def q8():
    return PrimePower(2, 3)


@pytest.fixture(scope="session")
def q9():
    return PrimePower(3, 2)


@pytest.fixture(scope="session")
def F2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def F3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def F8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2)
