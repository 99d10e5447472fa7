import pytest

from termite import parse_trs

ADDITION = """(VAR x y)
(RULES
  +(0,y) -> y
  +(s(x),y) -> s(+(x,y))
)
"""

# filled by test_acceptance; echoed after the run so the per-criterion
# verdicts survive output capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def add_text():
    return ADDITION


@pytest.fixture
def add_trs():
    return parse_trs(ADDITION)
