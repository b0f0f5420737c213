import pytest

from hecke_a2.gf import field_make


@pytest.fixture(scope="session")
def F2():
    return field_make(2)


@pytest.fixture(scope="session")
def F3():
    return field_make(3)


@pytest.fixture(scope="session")
def F5():
    return field_make(5)


@pytest.fixture(scope="session")
def F9():
    return field_make(3, 2, [1, 0, 1])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[n])
