import pytest
from hypothesis import strategies as st

from ferrers.core import Partition

ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_part=12, max_len=10):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return Partition(sorted(parts, reverse=True))


@st.composite
def distinct_partitions(draw, max_part=30):
    parts = draw(st.sets(st.integers(1, max_part), min_size=1, max_size=10))
    return Partition(sorted(parts, reverse=True))


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  ({detail})"
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
