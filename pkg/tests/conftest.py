import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jmhomology.symbolic import LaurentMonomial, LaurentPoly, gens  # noqa: E402


@pytest.fixture
def aQT():
    return gens("a", "Q", "T")


def mono(**powers):
    return LaurentMonomial.of(**powers)


def P(**powers):
    return LaurentPoly.monomial(LaurentMonomial.of(**powers))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
