from __future__ import annotations

import random

import pytest

from qcolor.families import random_tree

_acceptance_key = pytest.StashKey[list]()


def tree_corpus(count: int = 200, seed: int = 2024):
    """Seed-deterministic random trees with 2..12 vertices."""
    r = random.Random(seed)
    return [random_tree(r.randint(2, 12), r.randrange(10**9)) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def acceptance(request):
    """Record one verdict line per acceptance criterion."""
    lines = request.config.stash.setdefault(_acceptance_key, [])

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
