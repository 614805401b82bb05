import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from youngcm import RectConfig  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def cfg23():
    return RectConfig(2, 3)


@pytest.fixture
def cfg34():
    return RectConfig(3, 4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
