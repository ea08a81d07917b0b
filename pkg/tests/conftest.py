from fractions import Fraction

import pytest
from hypothesis import strategies as st

from divquat import Quaternion

ACCEPTANCE_LINES: list[str] = []

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=100)
floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def quaternions(elements=fractions):
    return st.builds(Quaternion, elements, elements, elements, elements)


nonzero_quaternions = quaternions().filter(lambda r: any(c != 0 for c in r))


def F(*values) -> Quaternion:
    return Quaternion(*(Fraction(v) for v in values))


@pytest.fixture
def acceptance_record():
    def record(number: int, name: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"criterion {number} [{status}] {name}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
