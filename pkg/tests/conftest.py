import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from trilattice import LatticePoint, LatticeTriangle  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


coords = st.integers(min_value=-30, max_value=30)
points = st.builds(LatticePoint, coords, coords)


def _nondegenerate(c):
    (ax, ay), (bx, by), (cx, cy) = c
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0


def triangles(c=coords):
    pair = st.tuples(c, c)
    return (
        st.tuples(pair, pair, pair)
        .filter(_nondegenerate)
        .map(lambda vs: LatticeTriangle(*(LatticePoint(x, y) for x, y in vs)))
    )


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, text: str) -> None:
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
