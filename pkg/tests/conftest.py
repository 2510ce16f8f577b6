import pytest

from gcilab import catalog

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def load():
    return catalog.load


@pytest.fixture(scope="session")
def A5():
    return catalog.load("A5")


@pytest.fixture(scope="session")
def A6():
    return catalog.load("A6")


@pytest.fixture(scope="session")
def L27():
    return catalog.load("L2(7)")


@pytest.fixture(scope="session")
def M11():
    return catalog.load("M11")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
