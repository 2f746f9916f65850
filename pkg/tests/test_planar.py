from __future__ import annotations

from fractions import Fraction

import pytest

from qcolor.families import clique, grid, path, random_planar, star
from qcolor.graph import components, validate
from qcolor.planar import approx_planar, component_limit, find_separator


def check_separator(g, res):
    pieces = components(g, removed=res.separator)
    assert sorted(map(tuple, pieces)) == sorted(res.components)
    assert all(len(c) <= res.limit for c in res.components)


def test_component_limit():
    assert component_limit(100, 0.1) == 10
    assert component_limit(400, 400 ** (-1 / 3)) == 55
    assert component_limit(10, Fraction(1, 3)) == 4
    assert component_limit(3, 0.01) == 1


def test_path_separator():
    g = path(100)
    res = find_separator(g, 0.1)
    check_separator(g, res)
    assert res.size <= 10


def test_epsilon_one_needs_nothing():
    res = find_separator(clique(4), 1)
    assert res.size == 0 and res.components == ((0, 1, 2, 3),)
    with pytest.raises(ValueError):
        find_separator(clique(4), 0)


def test_grid_separator():
    g = grid(20, 20)
    res = find_separator(g, 400 ** (-1 / 3))
    assert res.limit == 55
    check_separator(g, res)


def test_star_takes_center():
    plain = approx_planar(star(9), rebalance=False)
    assert plain.value == 9 and plain.extra["separator_size"] == 1
    # one leaf edge moves to its own color
    assert approx_planar(star(9)).value == 8


@pytest.mark.parametrize("g", [grid(12, 12), path(60), star(20)])
def test_rebalance_never_hurts(g):
    plain = approx_planar(g, rebalance=False)
    rep = approx_planar(g)
    assert validate(g, 2, rep.coloring) and rep.value <= plain.value


def test_path_and_grid_reports():
    rep = approx_planar(path(100))
    assert validate(path(100), 2, rep.coloring) and rep.value <= 99
    g = grid(20, 20)
    rep = approx_planar(g)
    assert validate(g, 2, rep.coloring)
    assert rep.extra["ratio"] == rep.value / 2


def test_small_graphs_fall_back_to_exact():
    rep = approx_planar(clique(4))
    assert rep.value == 3 and rep.extra["fallback"] == "exact"


@pytest.mark.parametrize("n,seed", [(50, 1), (200, 2), (600, 3)])
def test_random_planar_with_embedding(n, seed):
    inst = random_planar(n, seed)
    rep = approx_planar(inst.graph, inst.rotation)
    assert validate(inst.graph, 2, rep.coloring)
    res = find_separator(inst.graph, n ** (-1 / 3), inst.rotation)
    check_separator(inst.graph, res)
