"""Lower bounds on the optimum and the one-color baseline."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .graph import EdgeColoring, Graph, SolveReport, degree_stats, is_tree


class NotATreeError(ValueError):
    pass


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def max_degree_bound(g: Graph, q: int) -> int:
    """``ceil(max degree / q)``: a vertex sees at most ``q`` groups."""
    if g.m == 0:
        return 0
    delta, _ = degree_stats(g)
    return ceil(delta / q) if q > 0 else delta


def avg_degree_bound(g: Graph, q: int) -> Fraction:
    """``d^2 / (2 q^2)`` with ``d = 2m/n``, kept exact."""
    if g.m == 0:
        return Fraction(0)
    _, d = degree_stats(g)
    return d * d / (2 * q * q)


def tree_interval(g: Graph) -> tuple[int, int]:
    """Range ``[ceil(D/2), D-1]`` holding the q=2 optimum of a tree."""
    if not is_tree(g):
        raise NotATreeError("tree_interval needs a tree")
    if g.m == 0:
        return (0, 0)
    delta, _ = degree_stats(g)
    if delta == 1:
        return (1, 1)
    return ((delta + 1) // 2, delta - 1)


@dataclass(frozen=True)
class BoundReport:
    max_degree_bound: int
    avg_degree_bound_real: Fraction
    avg_degree_bound: int
    tree_interval: tuple[int, int] | None
    best: int

    def to_document(self) -> dict:
        r = self.avg_degree_bound_real
        return {
            "max_degree_bound": self.max_degree_bound,
            "avg_degree_bound_real": f"{r.numerator}/{r.denominator}",
            "avg_degree_bound": self.avg_degree_bound,
            "tree_interval": list(self.tree_interval) if self.tree_interval else None,
            "best": self.best,
        }


def bound_report(g: Graph, q: int) -> BoundReport:
    md = max_degree_bound(g, q)
    real = avg_degree_bound(g, q)
    ad = _ceil(real)
    interval = None
    if q == 2 and g.m > 0 and is_tree(g):
        interval = tree_interval(g)
    best = max(md, ad, interval[0] if interval else 0)
    if g.m > 0:
        best = max(best, 1)
    return BoundReport(md, real, ad, interval, best)


def best_lower_bound(g: Graph, q: int) -> int:
    return bound_report(g, q).best


def trivial_coloring(g: Graph, q: int = 2) -> SolveReport:
    """Every edge gets color 0; ``q`` only selects the reported lower bound."""
    t0 = time.perf_counter()
    col = EdgeColoring([0] * g.m)
    return SolveReport(
        value=g.m,
        coloring=col,
        method="trivial",
        lower_bound=best_lower_bound(g, q),
        elapsed=time.perf_counter() - t0,
    )


def color_subgraph_avg_degrees(g: Graph, col: EdgeColoring) -> list[tuple[int, Fraction]]:
    """Average degree ``2|E_c| / |V_c|`` of each color's edge-induced subgraph."""
    edges_of: dict[int, int] = {}
    verts_of: dict[int, set[int]] = {}
    for (u, v), c in zip(g.edges, col):
        edges_of[c] = edges_of.get(c, 0) + 1
        verts_of.setdefault(c, set()).update((u, v))
    return [(c, Fraction(2 * edges_of[c], len(verts_of[c]))) for c in sorted(edges_of)]


def satisfies_color_subgraph_density(g: Graph, col: EdgeColoring, q: int) -> bool:
    """Some color subgraph reaches average degree ``d(G)/q`` (holds for every feasible q-coloring)."""
    if g.m == 0:
        return True
    _, d = degree_stats(g)
    return any(avg >= d / q for _, avg in color_subgraph_avg_degrees(g, col))
