import itertools
import random

import pytest

from betagraph.graph import from_edge_list

_CRITERIA: list[str] = []


def path(n):
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def cycle(n):
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def complete(n):
    return from_edge_list(itertools.combinations(range(n), 2), n)


def star(leaves):
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner, 10)


def random_graph(rng: random.Random, n: int, p: float | None = None):
    p = rng.random() if p is None else p
    return from_edge_list([e for e in itertools.combinations(range(n), 2) if rng.random() < p], n)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield from_edge_list([pairs[i] for i in range(len(pairs)) if bits >> i & 1], n)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else "")
        _CRITERIA.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
