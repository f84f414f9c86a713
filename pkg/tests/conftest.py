import random

import pytest
from hypothesis import strategies as st

from springer_dual.orbits import SO, SP, enumerate_marked
from springer_dual.partitions import Partition

partitions = st.lists(st.integers(1, 8), max_size=8).map(Partition.of)


@st.composite
def marked_pairs(draw, kind=None, max_size=10):
    kind = kind or draw(st.sampled_from([SP, SO]))
    if kind == SP:
        size = draw(st.integers(0, max_size // 2)) * 2
    else:
        size = draw(st.integers(1, max_size))
    return draw(st.sampled_from(enumerate_marked(kind, size)))


@pytest.fixture
def rng():
    return random.Random(20261019)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
