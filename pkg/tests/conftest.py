import pytest

from arithmos.core import build_sieve


@pytest.fixture(scope="session")
def sieve10k():
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def sieve100k():
    return build_sieve(10**5)
