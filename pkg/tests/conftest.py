import pytest

from rgsskit.field import build_extension


@pytest.fixture(scope="session")
def F8():
    return build_extension(2, 3)


@pytest.fixture(scope="session")
def F16():
    return build_extension(2, 4)


@pytest.fixture(scope="session")
def F9():
    return build_extension(3, 2)


@pytest.fixture(scope="session")
def F2():
    return build_extension(2, 1, [1, 1])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
