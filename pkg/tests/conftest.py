import random

import pytest
from hypothesis import strategies as st

from tripattern import BinaryMatrix

_ACCEPTANCE_LINES = []


@st.composite
def binary_matrices(draw, max_rows=8, max_cols=8, min_rows=0, min_cols=0):
    m = draw(st.integers(min_rows, max_rows))
    n = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=m, max_size=m))
    return BinaryMatrix(m, n, rows)


def random_matrix(rng: random.Random, m: int, n: int, p: float = 0.5) -> BinaryMatrix:
    return BinaryMatrix.from_lists([[int(rng.random() < p) for _ in range(n)] for _ in range(m)], n=n)


@pytest.fixture
def acceptance_log():
    """Record a one-line PASS/FAIL verdict printed in the terminal summary."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
