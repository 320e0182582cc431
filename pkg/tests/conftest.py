from __future__ import annotations

import pytest

from exzero import primes


@pytest.fixture(scope="session")
def table_1e4() -> primes.PrimeTable:
    return primes.sieve(10 ** 4)


@pytest.fixture(scope="session")
def table_1e5() -> primes.PrimeTable:
    return primes.sieve(10 ** 5)


@pytest.fixture(scope="session")
def table_1e6() -> primes.PrimeTable:
    return primes.sieve(10 ** 6)
