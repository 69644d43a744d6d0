import pytest
from hypothesis import settings

from dmoments.landau import QuantumNumbers

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GRID_FIELDS = (1e-7, 1.0, 1e10)


def level_grid(max_level=20):
    return [QuantumNumbers(n, k) for n in range(max_level + 1) for k in range(max_level + 1 - n)]


@pytest.fixture
def ground():
    return QuantumNumbers(0, 0)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
