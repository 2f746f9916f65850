from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qcolor.bounds import NotATreeError
from qcolor.families import clique, path, random_tree, star
from qcolor.graph import build_graph, group_sizes, validate
from qcolor.oracle import solve_exact
from qcolor.tree import KnapsackInstance, attempt, knapsack_max, solve_tree


def brute_knapsack(items, cap):
    best = 0
    for r in range(len(items) + 1):
        for sub in itertools.combinations(items, r):
            if sum(sub) <= cap:
                best = max(best, sum(sub))
    return best


def test_knapsack_examples():
    idx, total = knapsack_max([3, 4, 5], 7)
    assert total == 7 and sum([3, 4, 5][i] for i in idx) == 7
    assert knapsack_max([], 5) == ((), 0)
    assert knapsack_max([2, 2, 2], 3)[1] == 2
    assert KnapsackInstance(10, (6, 5, 4)).solve()[1] == 10
    with pytest.raises(ValueError):
        knapsack_max([0, 1], 3)


@given(st.lists(st.integers(1, 30), max_size=12), st.integers(0, 60))
def test_knapsack_matches_brute_force(items, cap):
    idx, total = knapsack_max(items, cap)
    assert total == sum(items[i] for i in idx) <= cap
    assert len(set(idx)) == len(idx)
    assert total == brute_knapsack(items, cap)


def test_attempt_examples():
    a = attempt(star(6), 0, 3)
    assert a.success and group_sizes(a.coloring)[1] == 3
    # a vertex below the root with five leaf children cannot stay within 2
    g = build_graph(7, [(0, 1)] + [(1, i) for i in range(2, 7)])
    fail = attempt(g, 0, 2)
    assert not fail.success and fail.failed_at == 1
    p = attempt(path(5), 0, 1)
    assert p.success and p.coloring.num_colors == 4


def test_solve_tree_examples():
    assert solve_tree(star(9)).value == 5
    assert solve_tree(path(2)).value == 1
    with pytest.raises(NotATreeError):
        solve_tree(clique(3))


def test_linear_scan_agrees():
    for seed in range(40):
        g = random_tree(10, seed)
        assert solve_tree(g).value == solve_tree(g, linear_scan=True).value


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 14), st.integers(0, 10**6))
def test_tree_matches_oracle(n, seed):
    g = random_tree(n, seed)
    rep = solve_tree(g)
    assert validate(g, 2, rep.coloring)
    assert rep.value == solve_exact(g, 2).value
