import pytest

from digroups import samples
from digroups.free_product import FactorPair

ACCEPTANCE_LINES = []


@pytest.fixture
def T2():
    return samples.T2()


@pytest.fixture
def Z2():
    return samples.Z2()


@pytest.fixture
def Z2b():
    """Z2 with elements named f (unit) and b, used as second factor."""
    return samples.Z2(("f", "b"))


@pytest.fixture
def W4():
    return samples.W4()


@pytest.fixture
def t2z2(T2, Z2b):
    return FactorPair(T2, Z2b)


@pytest.fixture
def w4z2(W4, Z2b):
    return FactorPair(W4, Z2b)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
