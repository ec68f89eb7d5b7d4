from __future__ import annotations

import pytest

from domcolor.generators import complete, cycle, path


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def p4():
    return path(4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
