import sys
from pathlib import Path

import pytest

from superplactic import make_alphabet, validate

sys.path.insert(0, str(Path(__file__).resolve().parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance scoreboard after the regular test summary."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def evens2():
    return make_alphabet(["1", "2"], [0, 0])


@pytest.fixture
def evens3():
    return make_alphabet(["1", "2", "3"], [0, 0, 0])


@pytest.fixture
def odds2():
    return make_alphabet(["1", "2"], [1, 1])


@pytest.fixture
def mixed2():
    return make_alphabet(["1", "2"], [0, 1])


@pytest.fixture
def mixed3():
    return make_alphabet(["1", "2", "3"], [0, 1, 0])


@pytest.fixture
def mixed4():
    return make_alphabet(["1", "2", "3", "4"], [0, 0, 1, 1])


@pytest.fixture
def alternating6():
    """Digits 1..6; odd digits carry parity 0, even digits parity 1."""
    return make_alphabet([str(i) for i in range(1, 7)], [(i + 1) % 2 for i in range(1, 7)])


@pytest.fixture
def split24():
    """Digits 1..6; 1 and 2 carry parity 0, the rest parity 1."""
    return make_alphabet([str(i) for i in range(1, 7)], [0, 0, 1, 1, 1, 1])


@pytest.fixture
def big_tableau(alternating6):
    """Seventeen-cell tableau exercised by the insertion and word tests."""
    rows = [
        ["1", "1", "1", "1", "4", "5"],
        ["2", "3", "3", "4"],
        ["2", "4"],
        ["2", "4"],
        ["2"],
        ["2"],
        ["3"],
    ]
    return validate(rows, alternating6)
