import random

import pytest
from hypothesis import strategies as st

from lehmer_nib.zeta5 import CycInt

ACCEPTANCE_LINES = []


def record(criterion, passed, detail=""):
    ACCEPTANCE_LINES.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_LINES:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {criterion}" + (f"  ({detail})" if detail else ""))


small_ints = st.integers(min_value=-30, max_value=30)
cycints = st.builds(CycInt, small_ints, small_ints, small_ints, small_ints)
nonzero_cycints = cycints.filter(bool)
tame_n = st.integers(min_value=-50, max_value=300).filter(lambda n: n % 5)


@pytest.fixture
def rng():
    return random.Random(20261018)
