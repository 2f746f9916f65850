"""Instance builders from monotone one-in-three SAT.

``reduce_general`` produces a per-vertex-budget instance whose optimum is at
most ``L = 4m + n`` exactly when the formula has a one-in-three satisfying
assignment.  ``reduce_uniform`` replaces the budget-1 and budget-2 vertices
by attaching them to shared high-degree stars, giving a uniform-``q``
instance with the same threshold.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    EdgeColoring,
    Graph,
    QSpec,
    build_graph,
    canonicalize,
    group_sizes,
    validate,
)
from .oracle import DEFAULT_MAX_UNITS, solve_exact


class FormulaError(ValueError):
    pass


class SoundnessError(AssertionError):
    """A coloring within the threshold decoded to a non-satisfying assignment."""


@dataclass(frozen=True)
class MonotoneFormula:
    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __init__(self, n_vars: int, clauses: Sequence[Sequence[int]]):
        object.__setattr__(self, "n_vars", int(n_vars))
        object.__setattr__(self, "clauses", tuple(tuple(int(x) for x in c) for c in clauses))
        for j, cl in enumerate(self.clauses):
            if len(cl) != 3:
                raise FormulaError(f"clause {j} has {len(cl)} literals, expected 3")
            if len(set(cl)) != 3:
                raise FormulaError(f"clause {j} repeats a variable: {cl}")
            if any(not 0 <= x < self.n_vars for x in cl):
                raise FormulaError(f"clause {j} uses a variable outside 0..{self.n_vars - 1}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> list[int]:
        occ = [0] * self.n_vars
        for cl in self.clauses:
            for x in cl:
                occ[x] += 1
        return occ

    def is_one_in_three(self, assignment: Sequence[bool]) -> bool:
        return all(sum(bool(assignment[x]) for x in cl) == 1 for cl in self.clauses)


def brute_force_sat(phi: MonotoneFormula, limit: int = 20) -> tuple[bool, ...] | None:
    """First one-in-three satisfying assignment in counting order, or None."""
    if phi.n_vars > limit:
        raise ValueError(f"{phi.n_vars} variables exceed the enumeration limit {limit}")
    for bits in itertools.product((False, True), repeat=phi.n_vars):
        if phi.is_one_in_three(bits):
            return bits
    return None


@dataclass(frozen=True)
class ReductionArtifact:
    formula: MonotoneFormula
    graph: Graph
    qspec: QSpec
    L: int
    roles: tuple[str, ...]
    clause_vertices: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    v: tuple[int, ...]
    f: int
    star_centers: tuple[int, ...] = ()
    star_L: int | None = None

    @property
    def uniform(self) -> bool:
        return self.qspec.is_uniform

    @property
    def faithful(self) -> bool:
        return self.star_L is None or self.star_L == self.L

    def gadget_edges(self) -> set[int]:
        centers = set(self.star_centers)
        return {e for e, (x, y) in enumerate(self.graph.edges) if x in centers or y in centers}


def _check_general(art: ReductionArtifact):
    phi, g = art.formula, art.graph
    occ = phi.occurrences()
    budgets = art.qspec.budgets(g.n)
    assert art.L == 4 * phi.m + phi.n_vars
    for i in range(phi.n_vars):
        assert g.degree(art.a[i]) == 2 * occ[i], "a-vertex degree"
        assert g.degree(art.b[i]) == art.L - 2 * occ[i], "b-vertex degree"
        assert budgets[art.a[i]] == budgets[art.b[i]] == 1
        assert budgets[art.v[i]] == 2
    assert budgets[art.f] == 1
    assert all(budgets[c] == 2 for c in art.clause_vertices)


def reduce_general(phi: MonotoneFormula) -> ReductionArtifact:
    """Per-vertex-budget instance with threshold ``L = 4m + n``.

    Every variable must occur in some clause: an unused variable's gadget
    would add an edge to whichever color it joins and break the threshold.
    """
    if phi.m < 1:
        raise FormulaError("formula needs at least one clause")
    occ = phi.occurrences()
    unused = [i for i, k in enumerate(occ) if k == 0]
    if unused:
        raise FormulaError(f"variables {unused} occur in no clause")
    m, n = phi.m, phi.n_vars
    L = 4 * m + n
    roles = [f"c_{j}" for j in range(m)]
    a, b, v = [], [], []
    for i in range(n):
        base = len(roles)
        a.append(base)
        b.append(base + 1)
        v.append(base + 2)
        roles += [f"a_{i}", f"b_{i}", f"v_{i}"]
    f = len(roles)
    roles.append("f")
    pairs = []
    budgets = [2] * m + [1, 1, 2] * n + [1]

    def leaf(owner):
        roles.append("leaf")
        budgets.append(1)
        pairs.append((owner, len(roles) - 1))

    for i in range(n):
        pairs += [(v[i], a[i]), (v[i], b[i]), (v[i], f)]
    for j, cl in enumerate(phi.clauses):
        for x in cl:
            pairs.append((a[x], j))
    for i in range(n):
        # a_i already has v_i and its m_i clause vertices; b_i has v_i
        for _ in range(occ[i] - 1):
            leaf(a[i])
        for _ in range(L - 2 * occ[i] - 1):
            leaf(b[i])
    g = build_graph(len(roles), pairs)
    art = ReductionArtifact(phi, g, QSpec.general(budgets), L, tuple(roles),
                            tuple(range(m)), tuple(a), tuple(b), tuple(v), f)
    _check_general(art)
    return art


def reduce_uniform(phi: MonotoneFormula, q: int, scale_L: int | None = None) -> ReductionArtifact:
    """Uniform-``q`` instance built from :func:`reduce_general`.

    ``q - 1`` stars with ``q*L`` spokes each are added.  A vertex that had
    budget 1 takes over one spoke of every star, a vertex with budget 2 one
    spoke of each of the first ``q - 2`` stars; once each star's color groups
    are full these vertices have exactly 1 or 2 colors left.

    ``scale_L`` sizes the stars with a smaller threshold for structural tests;
    such instances are not equivalent to the formula.
    """
    if q < 2:
        raise ValueError("uniform reduction needs q >= 2")
    gen = reduce_general(phi)
    L = gen.L
    star_L = L if scale_L is None else int(scale_L)
    old_budgets = gen.qspec.budgets(gen.graph.n)
    mimic = [x for x in range(gen.graph.n) if gen.roles[x] != "leaf"]
    M = len(mimic)
    assert M == phi.m + 3 * phi.n_vars + 1
    if scale_L is None:
        assert q * L >= 2 * L >= M, "star leaves cannot host every mimicked vertex"
    elif q * star_L < M:
        raise ValueError(f"scaled stars with {q * star_L} spokes cannot host {M} vertices")

    roles = list(gen.roles)
    pairs = list(gen.graph.edges)
    centers = []
    for s in range(q - 1):
        c = len(roles)
        centers.append(c)
        roles.append("star-center")
        hosted = [x for x in mimic if s < q - old_budgets[x]]
        for x in hosted:
            pairs.append((x, c))
        for _ in range(q * star_L - len(hosted)):
            roles.append("star-leaf")
            pairs.append((c, len(roles) - 1))
    g = build_graph(len(roles), pairs)
    art = ReductionArtifact(phi, g, QSpec.of(q), L, tuple(roles), gen.clause_vertices,
                            gen.a, gen.b, gen.v, gen.f, tuple(centers), star_L)
    for c in centers:
        assert g.degree(c) == q * star_L
    extra = g.m - gen.graph.m
    assert extra == (q - 1) * q * star_L
    return art


def forward_coloring(art: ReductionArtifact, assignment: Sequence[bool]) -> EdgeColoring:
    """Coloring with max group ``L`` built from a satisfying assignment.

    False variables' a-stars join the color of ``f``; each true variable gets
    one color shared by its a- and b-stars; each false variable's b-star gets
    its own color.  Only defined for the general reduction.
    """
    if art.uniform:
        raise ValueError("forward_coloring is defined for the general reduction")
    phi, g = art.formula, art.graph
    if not phi.is_one_in_three(assignment):
        raise ValueError("assignment does not one-in-three satisfy the formula")
    owner_color = {art.f: 0}
    nxt = 1
    for i in range(phi.n_vars):
        if assignment[i]:
            owner_color[art.a[i]] = owner_color[art.b[i]] = nxt
            nxt += 1
        else:
            owner_color[art.a[i]] = 0
            owner_color[art.b[i]] = nxt
            nxt += 1
    colors = []
    for x, y in g.edges:
        # every edge touches exactly one of the budget-1 hubs a_i, b_i, f
        hub = x if x in owner_color else y
        colors.append(owner_color[hub])
    return canonicalize(colors)


def _hub_color(art: ReductionArtifact, col: EdgeColoring, hub: int) -> int:
    gadget = art.gadget_edges()
    cs = {col[e] for _, e in art.graph.adjacency[hub] if e not in gadget}
    if len(cs) != 1:
        raise ValueError(f"vertex {hub} sees {len(cs)} non-gadget colors")
    return cs.pop()


def extract_assignment(art: ReductionArtifact, col: EdgeColoring) -> tuple[bool, ...]:
    """Read the truth assignment off a coloring with max group at most ``L``.

    ``x_i`` is true iff the color on ``a_i``'s own edges differs from the
    color on ``f``'s edges.  Raises :class:`SoundnessError` if the result is
    not one-in-three satisfying.
    """
    g = art.graph
    if not validate(g, art.qspec, col):
        raise ValueError("coloring is infeasible for the instance")
    if group_sizes(col)[1] > art.L:
        raise ValueError(f"coloring exceeds the threshold L={art.L}")
    F = _hub_color(art, col, art.f)
    x = tuple(_hub_color(art, col, art.a[i]) != F for i in range(art.formula.n_vars))
    if not art.formula.is_one_in_three(x):
        raise SoundnessError(f"decoded assignment {x} does not satisfy the formula")
    return x


@dataclass(frozen=True)
class EquivalenceResult:
    sat: bool
    opt: int
    L: int
    agree: bool
    assignment: tuple[bool, ...] | None

    @property
    def verdict(self) -> str:
        return "agree" if self.agree else "disagree"


def check_equivalence(
    phi: MonotoneFormula, *, max_vars: int = 20, max_units: int | None = DEFAULT_MAX_UNITS
) -> EquivalenceResult:
    """Compare brute-force satisfiability with the oracle optimum of the general reduction."""
    sat = brute_force_sat(phi, limit=max_vars) is not None
    art = reduce_general(phi)
    rep = solve_exact(art.graph, art.qspec, max_edges=max_units)
    assignment = None
    if rep.value <= art.L:
        assignment = extract_assignment(art, rep.coloring)
    return EquivalenceResult(sat, rep.value, art.L, sat == (rep.value <= art.L), assignment)


def canonical_formula(phi: MonotoneFormula) -> tuple:
    """Key identifying ``phi`` up to renaming variables and reordering clauses."""
    best = None
    for perm in itertools.permutations(range(phi.n_vars)):
        key = tuple(sorted(tuple(sorted(perm[x] for x in cl)) for cl in phi.clauses))
        if best is None or key < best:
            best = key
    return (phi.n_vars, best)


def all_formulas(max_vars: int, max_clauses: int) -> list[MonotoneFormula]:
    """Every formula with all variables used, up to renaming and clause order."""
    out = {}
    for n in range(3, max_vars + 1):
        triples = list(itertools.combinations(range(n), 3))
        for m in range(1, max_clauses + 1):
            for cls in itertools.combinations_with_replacement(triples, m):
                if len({x for c in cls for x in c}) != n:
                    continue
                phi = MonotoneFormula(n, cls)
                out.setdefault(canonical_formula(phi), phi)
    return [out[k] for k in sorted(out)]
