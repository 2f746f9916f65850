from __future__ import annotations

import pytest

from qcolor.graph import group_sizes, validate
from qcolor.oracle import forced_propagation, solve_exact
from qcolor.reduction import (
    FormulaError,
    MonotoneFormula,
    SoundnessError,
    all_formulas,
    brute_force_sat,
    canonical_formula,
    check_equivalence,
    extract_assignment,
    forward_coloring,
    reduce_general,
    reduce_uniform,
)

ONE = MonotoneFormula(3, [(0, 1, 2)])


def test_formula_validation():
    with pytest.raises(FormulaError):
        MonotoneFormula(3, [(0, 1)])
    with pytest.raises(FormulaError):
        MonotoneFormula(3, [(0, 0, 1)])
    with pytest.raises(FormulaError):
        MonotoneFormula(3, [(0, 1, 3)])
    with pytest.raises(FormulaError):
        reduce_general(MonotoneFormula(4, [(0, 1, 2)]))


def test_general_structure():
    art = reduce_general(ONE)
    assert art.L == 7
    g = art.graph
    for i in range(3):
        assert g.degree(art.a[i]) == 2 and g.degree(art.b[i]) == 5
    # 3 hub triples (v-a, v-b, v-f), 3 a-clause edges, 12 b-leaves; a_i has no leaves
    assert g.m == 9 + 3 + 12 == 24
    assert len(forced_propagation(g, art.qspec)) == 2 * 3 + 1


def test_forced_classes_count_on_larger_formula():
    phi = MonotoneFormula(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    art = reduce_general(phi)
    assert len(forced_propagation(art.graph, art.qspec)) == 2 * 4 + 1


def test_forward_and_extract():
    art = reduce_general(ONE)
    col = forward_coloring(art, (True, False, False))
    assert validate(art.graph, art.qspec, col)
    assert group_sizes(col)[1] == art.L
    assert extract_assignment(art, col) == (True, False, False)
    with pytest.raises(ValueError):
        forward_coloring(art, (True, True, False))


def test_oracle_optimum_decodes():
    phi = MonotoneFormula(4, [(0, 1, 2), (1, 2, 3)])
    art = reduce_general(phi)
    rep = solve_exact(art.graph, art.qspec)
    assert rep.value <= art.L
    assert phi.is_one_in_three(extract_assignment(art, rep.coloring))


def test_extract_rejects_over_threshold():
    art = reduce_general(ONE)
    col = forward_coloring(art, (True, False, False))
    bad = [0] * art.graph.m
    with pytest.raises(ValueError):
        extract_assignment(art, type(col)(bad))


def test_soundness_error_is_assertion():
    assert issubclass(SoundnessError, AssertionError)


@pytest.mark.parametrize("q", [2, 3])
def test_uniform_structure(q):
    art = reduce_uniform(ONE, q)
    assert art.uniform and art.faithful
    assert len(art.star_centers) == q - 1
    for c in art.star_centers:
        assert art.graph.degree(c) == q * art.L
    hub = art.f
    gadget_degree = sum(1 for w, _ in art.graph.adjacency[hub] if w in art.star_centers)
    assert gadget_degree == q - 1
    clause = art.clause_vertices[0]
    assert sum(1 for w, _ in art.graph.adjacency[clause] if w in art.star_centers) == q - 2


def test_uniform_scaled():
    art = reduce_uniform(ONE, 2, scale_L=6)
    assert not art.faithful and art.graph.degree(art.star_centers[0]) == 12
    with pytest.raises(ValueError):
        reduce_uniform(ONE, 2, scale_L=2)
    with pytest.raises(ValueError):
        reduce_uniform(ONE, 1)


@pytest.mark.parametrize("phi,sat", [
    (ONE, True),
    (MonotoneFormula(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]), False),
    (MonotoneFormula(3, [(0, 1, 2)] * 3), True),
])
def test_equivalence_examples(phi, sat):
    res = check_equivalence(phi)
    assert res.sat == sat and res.verdict == "agree"
    assert (brute_force_sat(phi) is not None) == sat


def test_formula_enumeration():
    fs = all_formulas(5, 3)
    keys = {canonical_formula(f) for f in fs}
    assert len(keys) == len(fs)
    assert canonical_formula(MonotoneFormula(3, [(2, 1, 0)])) == canonical_formula(ONE)
