import pytest

from matrixf5.examples import circles as _circles
from matrixf5.polynomial import parse

VARS = ["x", "y", "z", "h"]


@pytest.fixture
def circles():
    return _circles()


@pytest.fixture
def P():
    """Parse over the circles variables."""
    def _p(text, p=65521):
        return parse(text, VARS, p)
    return _p


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
