import pytest

import bipham


@pytest.fixture(scope="session")
def d8():
    return bipham.d8()


@pytest.fixture(scope="session")
def d6():
    return bipham.d6()


@pytest.fixture(scope="session")
def h6():
    return bipham.h6()


@pytest.fixture(scope="session")
def hprime6():
    return bipham.hprime6()


@pytest.fixture(scope="session")
def ex4_4():
    return bipham.ex4(4, size_a=1)


@pytest.fixture(scope="session")
def ex5_4():
    return bipham.ex5(4)
