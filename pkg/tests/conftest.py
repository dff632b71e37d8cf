import random

import pytest
from hypothesis import strategies as st

from toristab import MonomialMap

def matrices(lo=-6, hi=6):
    """Integer matrices with nonzero determinant."""
    e = st.integers(lo, hi)
    return (st.tuples(e, e, e, e)
            .filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)
            .map(lambda m: MonomialMap(*m)))


def random_matrix(rng: random.Random, lo=-5, hi=5) -> MonomialMap:
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return MonomialMap(a, b, c, d)


@pytest.fixture
def rng():
    return random.Random(20241016)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
