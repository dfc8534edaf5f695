import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from multieuler import Multidigraph, MultiGraph

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@st.composite
def multidigraphs(draw, max_n=5, max_m=10, min_m=0):
    n = draw(st.integers(1, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          min_size=min_m, max_size=max_m))
    return Multidigraph(n, tuple(pairs))


@st.composite
def connected_multigraphs(draw, max_n=8, max_m=16):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    tree = [(p, i) for i, p in zip(range(1, n), parents)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=max(0, max_m - len(tree))))
    edges = tree + extra
    if not edges:
        edges = [(0, 0)]
    return MultiGraph(n, tuple(edges))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    def record(criterion: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        print(ACCEPTANCE_LINES[-1])
    return record
