from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcolor.bounds import (
    NotATreeError,
    avg_degree_bound,
    bound_report,
    color_subgraph_avg_degrees,
    max_degree_bound,
    satisfies_color_subgraph_density,
    tree_interval,
    trivial_coloring,
)
from qcolor.families import clique, clique_coloring, hypercube, hypercube_coloring, path, star
from qcolor.graph import EdgeColoring, build_graph, degree_stats, is_connected, validate
from qcolor.oracle import solve_exact


def test_max_degree_bound():
    assert max_degree_bound(clique(6), 2) == 3
    assert max_degree_bound(star(9), 2) == 5
    assert max_degree_bound(hypercube(4), 2) == 2
    assert max_degree_bound(build_graph(3, []), 2) == 0


def test_avg_degree_bound():
    assert avg_degree_bound(clique(6), 2) == Fraction(25, 8)
    assert avg_degree_bound(hypercube(4), 2) == 2
    assert avg_degree_bound(path(7), 2) < 2


def test_tree_interval():
    assert tree_interval(star(8)) == (4, 7)
    assert tree_interval(path(3)) == (1, 1)
    spider = build_graph(11, [(0, i) for i in range(1, 6)] + [(i, i + 5) for i in range(1, 6)])
    assert tree_interval(spider) == (3, 4)
    with pytest.raises(NotATreeError):
        tree_interval(clique(3))


def test_bound_report_document():
    doc = bound_report(clique(6), 2).to_document()
    assert doc == {"max_degree_bound": 3, "avg_degree_bound_real": "25/8",
                   "avg_degree_bound": 4, "tree_interval": None, "best": 4}
    assert bound_report(star(8), 2).to_document()["tree_interval"] == [4, 7]


@pytest.mark.parametrize("g,value", [(clique(6), 15), (path(3), 2), (hypercube(3), 12)])
def test_trivial(g, value):
    rep = trivial_coloring(g)
    assert rep.value == value and validate(g, 1, rep.coloring)


def test_color_subgraph_degrees():
    g = clique(6)
    assert color_subgraph_avg_degrees(g, EdgeColoring([0] * 15)) == [(0, Fraction(5))]
    degs = color_subgraph_avg_degrees(g, clique_coloring(6))
    assert [d for _, d in degs] == [Fraction(5, 2)] * 3
    cube = hypercube(4)
    assert all(d == 2 for _, d in color_subgraph_avg_degrees(cube, hypercube_coloring(4)))
    assert satisfies_color_subgraph_density(cube, hypercube_coloring(4), 2)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(2, 6))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=9, unique=True))
    return build_graph(n, chosen)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(1, 3))
def test_bounds_below_optimum(g, q):
    rep = solve_exact(g, q)
    br = bound_report(g, q)
    assert rep.value >= br.best
    assert rep.value >= avg_degree_bound(g, q)
    assert satisfies_color_subgraph_density(g, rep.coloring, q)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_trivial_ratio_within_linear_factor(g):
    # the one-color answer is at most 4n/d times the optimum on connected graphs
    if not is_connected(g) or g.n < 2:
        return
    opt = solve_exact(g, 2).value
    _, d = degree_stats(g)
    assert Fraction(g.m, opt) <= 4 * g.n / d
