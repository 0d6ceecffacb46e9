import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maopaths import parse_graph  # noqa: E402

K4_TEXT = "4 6\n1 2\n1 3\n2 3\n1 4\n2 4\n3 4\n"
C4_TEXT = "4 4\n1 2\n2 3\n3 4\n4 1\n"
P3_TEXT = "3 2\n1 2\n2 3\n"
STAR_TEXT = "4 3\n1 2\n1 3\n1 4\n"


@pytest.fixture
def k4():
    return parse_graph(K4_TEXT)


@pytest.fixture
def c4():
    return parse_graph(C4_TEXT)


@pytest.fixture
def p3():
    return parse_graph(P3_TEXT)


@pytest.fixture
def star():
    return parse_graph(STAR_TEXT)


# Acceptance criteria register their outcome here; the summary hook prints
# one line per criterion at the end of the run.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
