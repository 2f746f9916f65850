"""Exact min-max edge 2-coloring of trees.

For every root and every candidate bound ``c`` the tree is colored bottom
up: each vertex packs its children's residual edge bundles into one fresh
color with a subset-sum knapsack, and the unpacked bundles travel up to be
colored together with the vertex's parent edge.  The smallest ``c`` that
succeeds for some root is optimal.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from ._kernels import knapsack_max as _knapsack
from .bounds import NotATreeError, best_lower_bound
from .graph import (
    EdgeColoring,
    Graph,
    SolveReport,
    canonicalize,
    degree_stats,
    group_sizes,
    is_tree,
)


@dataclass(frozen=True)
class KnapsackInstance:
    capacity: int
    items: tuple[int, ...]

    def __post_init__(self):
        if self.capacity < 0:
            raise ValueError("knapsack capacity must be >= 0")
        if any(w < 1 for w in self.items):
            raise ValueError("knapsack item sizes must be >= 1")

    def solve(self) -> tuple[tuple[int, ...], int]:
        return knapsack_max(self.items, self.capacity)


def knapsack_max(items, capacity: int) -> tuple[tuple[int, ...], int]:
    """Subset of ``items`` with the largest sum not above ``capacity``.

    Ties go to the lexicographically smallest index tuple.
    """
    items = [int(w) for w in items]
    if any(w < 1 for w in items):
        raise ValueError("knapsack item sizes must be >= 1")
    return _knapsack(items, int(capacity))


@dataclass(frozen=True)
class RootedAttempt:
    root: int
    c: int
    residuals: tuple[int, ...]
    coloring: EdgeColoring | None
    failed_at: int | None

    @property
    def success(self) -> bool:
        return self.coloring is not None


@dataclass(frozen=True)
class _Rooting:
    root: int
    parent_edge: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]


def _root(g: Graph, root: int) -> _Rooting:
    dist = [-1] * g.n
    parent_edge = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, e in sorted(g.adjacency[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent_edge[w] = e
                children[v].append(w)
                queue.append(w)
    inner = [v for v in range(g.n) if children[v]]
    inner.sort(key=lambda v: (-dist[v], v))
    return _Rooting(root, tuple(parent_edge), tuple(map(tuple, children)), tuple(inner))


def _attempt(g: Graph, rt: _Rooting, c: int) -> RootedAttempt:
    residual = [1] * g.n
    residual[rt.root] = 0
    bundle: list[list[int]] = [[e] for e in rt.parent_edge]
    bundle[rt.root] = []
    colors = [-1] * g.m
    fresh = 0
    for v in rt.order:
        kids = rt.children[v]
        items = [residual[w] for w in kids]
        chosen, packed = _knapsack(items, c)
        left = sum(items) - packed
        if left + residual[v] > c:
            return RootedAttempt(rt.root, c, tuple(residual), None, v)
        if chosen:
            for i in chosen:
                for e in bundle[kids[i]]:
                    colors[e] = fresh
            fresh += 1
        picked = set(chosen)
        for i, w in enumerate(kids):
            if i not in picked:
                bundle[v].extend(bundle[w])
        residual[v] += left
    if bundle[rt.root]:
        for e in bundle[rt.root]:
            colors[e] = fresh
        fresh += 1
    return RootedAttempt(rt.root, c, tuple(residual), EdgeColoring(colors), None)


def attempt(g: Graph, root: int, c: int) -> RootedAttempt:
    """Try to 2-color tree ``g`` rooted at ``root`` with every group at most ``c``."""
    if not is_tree(g):
        raise NotATreeError("attempt needs a tree")
    if c < 1:
        raise ValueError("candidate bound must be >= 1")
    return _attempt(g, _root(g, root), c)


def solve_tree(g: Graph, linear_scan: bool = False) -> SolveReport:
    """Optimal q=2 coloring of a tree.

    Every root is tried; per root the candidate bound is binary searched over
    ``[ceil(D/2), D-1]`` (or scanned upward when ``linear_scan`` is set).
    Ties between roots go to the smaller root id.
    """
    if not is_tree(g):
        raise NotATreeError("solve_tree needs a tree")
    if g.n < 2:
        raise ValueError("solve_tree needs at least one edge")
    t0 = time.perf_counter()
    delta, _ = degree_stats(g)
    lower = best_lower_bound(g, 2)
    if delta == 1:
        return SolveReport(1, EdgeColoring([0]), "tree", lower, time.perf_counter() - t0,
                           extra={"root": 0})

    lo0, hi0 = (delta + 1) // 2, delta - 1
    best: RootedAttempt | None = None
    for r in range(g.n):
        hi = hi0 if best is None else best.c - 1
        if hi < lo0:
            break
        rt = _root(g, r)
        found = None
        if linear_scan:
            for c in range(lo0, hi + 1):
                a = _attempt(g, rt, c)
                if a.success:
                    found = a
                    break
        else:
            lo = lo0
            while lo <= hi:
                mid = (lo + hi) // 2
                a = _attempt(g, rt, mid)
                if a.success:
                    found, hi = a, mid - 1
                else:
                    lo = mid + 1
        if found is not None:
            best = found
    if best is None:
        raise RuntimeError("no root succeeded within [ceil(D/2), D-1]")
    col = canonicalize(best.coloring)
    value = group_sizes(col)[1]
    return SolveReport(value, col, "tree", lower, time.perf_counter() - t0,
                       extra={"root": best.root})
