import math

import pytest

from dephasing_nonlocality import EWLParams, Flavor

INV_SQRT2 = 1.0 / math.sqrt(2.0)
TSIRELSON = 2.0 * math.sqrt(2.0)


@pytest.fixture
def werner_09():
    return EWLParams(0.9, INV_SQRT2, Flavor.ONE_EXCITATION)


@pytest.fixture
def bell_phi():
    return EWLParams(1.0, INV_SQRT2, Flavor.TWO_EXCITATION)


# One summary line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
