from __future__ import annotations

import math

import pytest

from qcolor.families import (
    FamilySpec,
    biclique,
    biclique_bound,
    biclique_coloring,
    clique,
    clique_coloring,
    clique_opt_value,
    gen,
    grid,
    hypercube,
    hypercube_bound,
    hypercube_coloring,
    hypercube_coloring_value,
    random_planar,
    random_tree,
    subgraph_edge_bound,
)
from qcolor.graph import group_sizes, is_tree, validate


@pytest.mark.parametrize("spec,n,m", [
    (FamilySpec("clique", (6,)), 6, 15),
    (FamilySpec("hypercube", (3,)), 8, 12),
    (FamilySpec("biclique", (4, 2)), 6, 8),
    (FamilySpec("grid", (3, 4)), 12, 17),
])
def test_gen_sizes(spec, n, m):
    g = gen(spec)
    assert (g.n, g.m) == (n, m)


def test_family_spec_rules():
    assert FamilySpec("biclique", (2, 4)).params == (4, 2)
    with pytest.raises(ValueError):
        FamilySpec("random-tree", (5,))
    with pytest.raises(ValueError):
        FamilySpec("clique", (0,))
    with pytest.raises(ValueError):
        FamilySpec("torus", (3,))


def test_random_generators_are_seeded():
    assert random_tree(12, 7) == random_tree(12, 7)
    assert is_tree(random_tree(12, 7))
    a, b = random_planar(60, 3), random_planar(60, 3)
    assert a.graph == b.graph and a.rotation == b.rotation
    # triangulations of points in general position: m <= 3n - 6
    assert a.graph.m <= 3 * 60 - 6
    for v in range(60):
        assert sorted(a.rotation[v]) == a.graph.neighbors(v)


def test_clique_values():
    assert [clique_opt_value(n) for n in range(3, 9)] == [1, 3, 4, 5, 8, 10]
    with pytest.raises(ValueError):
        clique_opt_value(1)


@pytest.mark.parametrize("n", range(3, 41))
def test_clique_construction(n):
    col = clique_coloring(n)
    assert validate(clique(n), 2, col)
    assert group_sizes(col)[1] == clique_opt_value(n)
    assert col.num_colors == 3


def test_clique_six_is_three_by_five():
    sizes, mx = group_sizes(clique_coloring(6))
    assert sorted(sizes.values()) == [5, 5, 5]
    assert all(c == 2 for c in validate(clique(6), 2, clique_coloring(6)).counts)


def test_biclique():
    assert biclique_bound(4, 2) == 2 and biclique_bound(3, 3) == 3
    for m in range(2, 13):
        for n in range(2, m + 1):
            col = biclique_coloring(m, n)
            assert validate(biclique(m, n), 2, col)
            val = group_sizes(col)[1]
            assert val == math.ceil(m / 2) * math.ceil(n / 2)
            # tight for two even sides, and also when a side of 2 meets an odd side
            tight = (m % 2 == 0 and n % 2 == 0) or (2 in (m, n) and (m * n // 2) % 2 == 1)
            assert (val == biclique_bound(m, n)) == tight


def test_hypercube():
    assert hypercube_bound(4) == (4.0, 4)
    assert hypercube_bound(3)[1] == 3
    for d in range(1, 9):
        col = hypercube_coloring(d)
        assert validate(hypercube(d), 2, col)
        assert group_sizes(col)[1] == hypercube_coloring_value(d)
        if d % 2 == 0:
            assert hypercube_coloring_value(d) == hypercube_bound(d)[1]
    assert hypercube_coloring(4).num_colors == 8


def test_subgraph_edge_bound():
    assert subgraph_edge_bound(1) == 0
    assert subgraph_edge_bound(8) == 12 == hypercube(3).m
    assert grid(1, 1).m == 0
