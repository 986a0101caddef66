import pytest

from simroots.poly import parse_poly
from simroots.roots import least_primitive_root

ACCEPTANCE_LINES: list[str] = []

EXAMPLE_CASES = [
    (97, "t^2+1", 32, 4),
    (101, "t^2+1", 40, 12),
    (127, "(t+2)*(t+1)^2", 36, 9),
    (89, "(t+2)*(t+1)^2", 40, 18),
]


@pytest.fixture(scope="session")
def ctx97():
    return least_primitive_root(97)


@pytest.fixture(scope="session")
def ctx7():
    return least_primitive_root(7)


@pytest.fixture(scope="session")
def quad():
    return parse_poly("t^2+1")


@pytest.fixture(scope="session")
def cubic():
    return parse_poly("(t+2)*(t+1)^2")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
