import random

import pytest

from holeforge.catalog import full_catalog
from holeforge.graphs import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


@pytest.fixture(scope="session")
def catalog5():
    return full_catalog(5)


@pytest.fixture(scope="session")
def catalog6():
    return full_catalog(6)


@pytest.fixture(scope="session")
def catalog7():
    return full_catalog(7)


@pytest.fixture
def rng():
    return random.Random(20240817)


_ACCEPTANCE_LINES: list = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
