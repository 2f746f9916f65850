"""Exact branch-and-bound solver for small instances.

Edges incident to a vertex with budget 1 must share a color, so they are
merged up front into forced classes; the search then colors classes, not
edges.  A class gets either a color already in use or the next fresh color,
which visits every coloring exactly once up to renaming of colors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import ceil

from . import _kernels
from .bounds import avg_degree_bound, _ceil
from .graph import EdgeColoring, Graph, QSpec, SolveReport, as_qspec, canonicalize

DEFAULT_MAX_UNITS = 40


class InstanceTooLarge(ValueError):
    """The search would branch over more units than the configured limit."""


def forced_propagation(g: Graph, qs: QSpec | int) -> list[list[int]]:
    """Partition edge ids into classes that every feasible coloring keeps monochromatic.

    Classes are sorted by their smallest edge id.
    """
    qs = as_qspec(qs)
    budgets = qs.budgets(g.n)
    parent = list(range(g.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in range(g.n):
        if budgets[v] == 1 and len(g.adjacency[v]) > 1:
            first = find(g.adjacency[v][0][1])
            for _, e in g.adjacency[v][1:]:
                r = find(e)
                if r != first:
                    parent[max(r, first)] = min(r, first)
                    first = min(r, first)
    groups: dict[int, list[int]] = {}
    for e in range(g.m):
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values(), key=lambda cls: cls[0])


@dataclass(frozen=True)
class _Problem:
    classes: list[list[int]]
    members: list[list[int]]
    weights: list[int]
    budgets: list[int]


def _problem(g: Graph, qs: QSpec, order: str) -> _Problem:
    classes = forced_propagation(g, qs)
    deg = g.degrees()
    members = []
    for cls in classes:
        vs = set()
        for e in cls:
            vs.update(g.edges[e])
        members.append(sorted(vs))
    if order == "degree":
        key = [sum(deg[v] for v in ms) for ms in members]
        idx = sorted(range(len(classes)), key=lambda i: -key[i])
        classes = [classes[i] for i in idx]
        members = [members[i] for i in idx]
    elif order != "input":
        raise ValueError(f"unknown edge order {order!r}")
    weights = [len(cls) for cls in classes]
    return _Problem(classes, members, weights, qs.budgets(g.n))


def _instance_lower_bound(g: Graph, qs: QSpec, prob: _Problem) -> int:
    if g.m == 0:
        return 0
    lb = max(prob.weights)
    for v in range(g.n):
        lb = max(lb, ceil(g.degree(v) / prob.budgets[v]))
    if qs.is_uniform:
        lb = max(lb, _ceil(avg_degree_bound(g, qs.uniform)))
    return lb


def _edge_colors(prob: _Problem, assign: list[int], m: int) -> EdgeColoring:
    colors = [0] * m
    for cls, c in zip(prob.classes, assign):
        for e in cls:
            colors[e] = c
    return canonicalize(colors)


def _check_size(prob: _Problem, max_units: int | None):
    if max_units is not None and len(prob.classes) > max_units:
        raise InstanceTooLarge(
            f"{len(prob.classes)} branching units exceed the limit of {max_units}"
        )


def solve_exact(
    g: Graph,
    qs: QSpec | int = 2,
    upper_hint: int | None = None,
    *,
    max_edges: int | None = DEFAULT_MAX_UNITS,
    time_budget: float | None = None,
    order: str = "input",
) -> SolveReport:
    """Optimal coloring by branch and bound.

    ``max_edges`` limits the number of branching units (edges after forced
    merging).  With ``time_budget`` (seconds) the best coloring found so far
    is returned with ``proven=False`` when time runs out.
    """
    qs = as_qspec(qs)
    t0 = time.perf_counter()
    prob = _problem(g, qs, order)
    _check_size(prob, max_edges)
    lower = _instance_lower_bound(g, qs, prob)
    deadline = None if time_budget is None else t0 + time_budget

    upper = g.m
    if upper_hint is not None and upper_hint < g.m:
        upper = max(upper_hint, lower) + 1
    value, assign, proven, nodes = _kernels.optimize(
        prob.budgets, prob.weights, prob.members, upper, lower, deadline
    )
    if assign is None and upper < g.m and proven:
        # the hint was below the optimum
        value, assign, proven, nodes2 = _kernels.optimize(
            prob.budgets, prob.weights, prob.members, g.m, lower, deadline
        )
        nodes += nodes2
    if assign is None:
        col = EdgeColoring([0] * g.m)
        value = g.m
    else:
        col = _edge_colors(prob, assign, g.m)
    return SolveReport(
        value=value,
        coloring=col,
        method="exact",
        lower_bound=value if proven else min(lower, value),
        elapsed=time.perf_counter() - t0,
        proven=proven,
        extra={"proven": proven, "nodes": nodes, "backend": _kernels.BACKEND},
    )


def solve_exact_all_optima(
    g: Graph, qs: QSpec | int = 2, *, max_edges: int | None = 12
) -> list[EdgeColoring]:
    """Every optimal coloring up to color renaming, canonical and sorted."""
    qs = as_qspec(qs)
    prob = _problem(g, qs, "input")
    _check_size(prob, max_edges)
    opt = solve_exact(g, qs, max_edges=max_edges).value
    _, found = _kernels.enumerate_colorings(
        prob.budgets, prob.weights, prob.members, opt, collect=True
    )
    unique = {_edge_colors(prob, a, g.m).colors for a in found}
    return [EdgeColoring(c) for c in sorted(unique)]


def count_colorings(
    g: Graph, qs: QSpec | int = 2, cap: int | None = None, *, max_edges: int | None = 12
) -> int:
    """Number of feasible colorings up to color renaming (optionally with max group <= ``cap``)."""
    qs = as_qspec(qs)
    prob = _problem(g, qs, "input")
    _check_size(prob, max_edges)
    count, _ = _kernels.enumerate_colorings(
        prob.budgets, prob.weights, prob.members, g.m if cap is None else cap
    )
    return count
