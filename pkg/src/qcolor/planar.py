"""Separator-based 2-coloring for planar graphs.

A vertex separator ``S`` is grown until no component of ``G - S`` has more
than ``ceil(eps * n)`` vertices.  All edges touching ``S`` share one color
and each remaining component gets a color of its own, so every vertex sees
at most two colors.  With ``eps = n^(-1/3)`` the heaviest color is within
``O(n^(2/3))`` of the optimum on planar inputs.  An optional post-pass
moves separator edges into component colors when that lowers the maximum.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .bounds import best_lower_bound, trivial_coloring
from .graph import EdgeColoring, Graph, SolveReport, canonicalize, components, group_sizes
from .oracle import solve_exact

EXACT_FALLBACK_MAX_N = 8
EXACT_FALLBACK_MAX_M = 16


@dataclass(frozen=True)
class SeparatorResult:
    separator: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    epsilon: float
    limit: int
    size_budget_estimate: float

    @property
    def size(self) -> int:
        return len(self.separator)


def component_limit(n: int, eps) -> int:
    """``ceil(eps * n)``, at least 1."""
    if isinstance(eps, Fraction):
        return max(1, math.ceil(eps * n))
    return max(1, math.ceil(eps * n - 1e-9))


def _bfs_levels(g: Graph, comp: set[int], start: int) -> list[list[int]]:
    levels = [[start]]
    seen = {start}
    while True:
        nxt = []
        for v in levels[-1]:
            for w, _ in g.adjacency[v]:
                if w in comp and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            return levels
        nxt.sort()
        levels.append(nxt)


def _split_pieces(g: Graph, comp: set[int], cut: set[int]) -> list[list[int]]:
    seen = set(cut)
    out = []
    for s in sorted(comp):
        if s in seen:
            continue
        seen.add(s)
        piece = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if w in comp and w not in seen:
                    seen.add(w)
                    piece.append(w)
                    queue.append(w)
        out.append(sorted(piece))
    return out


def _level_cut(levels: list[list[int]], size: int, limit: int) -> int:
    """Index of the level to remove.

    Prefers the smallest level after which both sides fit ``limit``; then the
    smallest level leaving at most 2/3 of the vertices on either side; then
    the median level.
    """
    before = 0
    fitting = balanced = median = None
    for i, lev in enumerate(levels):
        after = size - before - len(lev)
        if median is None and before + len(lev) >= size / 2:
            median = i
        if max(before, after) <= limit:
            if fitting is None or len(lev) < len(levels[fitting]):
                fitting = i
        if 3 * max(before, after) <= 2 * size:
            if balanced is None or len(lev) < len(levels[balanced]):
                balanced = i
        before += len(lev)
    for choice in (fitting, balanced, median):
        if choice is not None:
            return choice
    return 0


def _cycle_cut(g: Graph, comp: set[int], levels: list[list[int]], mid: int,
               rotation, max_candidates: int = 24) -> set[int] | None:
    """Level-band plus fundamental-cycle separator.

    Two thin levels bracketing ``mid`` cut off a band; a BFS tree of the band
    (levels above it contracted into the root) closes each non-tree edge into
    a cycle.  Candidate edges are taken in rotation order around the middle
    level and the one whose removal leaves the smallest largest piece wins.
    """
    size = len(comp)
    thin = math.sqrt(size)
    lo = mid
    while lo > 0 and len(levels[lo]) > thin:
        lo -= 1
    hi = mid
    while hi < len(levels) - 1 and len(levels[hi]) > thin:
        hi += 1
    level_of = {v: i for i, lev in enumerate(levels) for v in lev}
    parent: dict[int, int | None] = {}
    for v in levels[lo + 1] if lo + 1 <= hi else []:
        parent[v] = None
    for i in range(lo + 2, hi):
        for v in levels[i]:
            ups = sorted(w for w, _ in g.adjacency[v] if level_of.get(w) == i - 1 and w in comp)
            parent[v] = ups[0] if ups else None
    band = [v for i in range(lo + 1, hi) for v in levels[i]]
    if not band:
        return None

    def up(v):
        path = []
        while v is not None:
            path.append(v)
            v = parent[v]
        return path

    candidates = []
    seen_pairs = set()
    for v in levels[mid] if lo < mid < hi else band:
        for w in rotation[v]:
            if w not in parent or parent.get(v) == w or parent.get(w) == v:
                continue
            key = (min(v, w), max(v, w))
            if key not in seen_pairs:
                seen_pairs.add(key)
                candidates.append(key)
    if not candidates:
        return None
    step = max(1, len(candidates) // max_candidates)
    best = None
    for u, w in candidates[::step][:max_candidates]:
        cycle = set(up(u)) | set(up(w))
        cut = set(levels[lo]) | set(levels[hi]) | cycle
        pieces = _split_pieces(g, comp, cut)
        worst = max((len(p) for p in pieces), default=0)
        key = (worst + len(cut), len(cut))
        if best is None or key < best[0]:
            best = (key, cut)
    return best[1]


def _split(g: Graph, comp: list[int], limit: int, rotation, level_factor: float) -> set[int]:
    cset = set(comp)
    if len(comp) <= 2:
        return {comp[0]}
    far = _bfs_levels(g, cset, comp[0])[-1][0]
    levels = _bfs_levels(g, cset, far)
    if len(levels) == 1:
        return {far}
    i = _level_cut(levels, len(comp), limit)
    # level counts ignore that one side may fall apart; check cheaper levels directly
    target = max(limit, 2 * len(comp) // 3)
    cheaper = sorted((j for j in range(len(levels)) if len(levels[j]) < len(levels[i])),
                     key=lambda j: (len(levels[j]), j))
    for j in cheaper[:8]:
        pieces = _split_pieces(g, cset, set(levels[j]))
        if max((len(p) for p in pieces), default=0) <= target:
            i = j
            break
    cut = set(levels[i])
    if rotation is not None and len(cut) > level_factor * math.sqrt(2 * len(comp)):
        alt = _cycle_cut(g, cset, levels, i, rotation)
        if alt is not None and len(alt) < len(cut):
            worst = max((len(p) for p in _split_pieces(g, cset, alt)), default=0)
            if worst < len(comp) - len(alt):
                cut = alt
    return cut


def _shrink(g: Graph, sep: set[int], comps: list[list[int]], limit: int):
    """Return separator vertices to the graph when that keeps the invariants.

    A separator vertex may rejoin if it and every component it touches fit in
    ``limit`` together; those components merge through it.  Vertices with the
    smallest merged size go first, and passes repeat until nothing moves.
    """
    parent = list(range(len(comps)))
    size = [len(c) for c in comps]
    comp_of = {v: i for i, c in enumerate(comps) for v in c}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def touching(v):
        return {find(comp_of[w]) for w, _ in g.adjacency[v] if w in comp_of}

    left = set(sep)
    moved = True
    while moved and left:
        moved = False
        ranked = sorted(left, key=lambda v: (1 + sum(size[r] for r in touching(v)), v))
        for v in ranked:
            roots = touching(v)
            total = 1 + sum(size[r] for r in roots)
            if total > limit:
                continue
            if roots:
                keep = min(roots)
                for r in roots:
                    parent[r] = keep
            else:
                keep = len(parent)
                parent.append(keep)
                size.append(0)
            size[keep] = total
            comp_of[v] = keep
            left.discard(v)
            moved = True
    groups: dict[int, list[int]] = {}
    for v, c in comp_of.items():
        groups.setdefault(find(c), []).append(v)
    return left, [sorted(c) for c in groups.values()]


def find_separator(g: Graph, eps, embedding=None, level_factor: float = 2.0) -> SeparatorResult:
    """Vertex set whose removal leaves components of at most ``ceil(eps*n)`` vertices.

    The largest oversized component is split repeatedly by a BFS level (or,
    with an embedding, a band-and-cycle cut when the level is large) until
    every component fits.  Always terminates; the size of the separator is
    reported, not guaranteed.
    """
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    n = g.n
    limit = component_limit(n, eps)
    sep: set[int] = set()
    pending = [c for c in components(g)]
    done = []
    while pending:
        pending.sort(key=lambda c: (-len(c), c[0]))
        comp = pending.pop(0)
        if len(comp) <= limit:
            done.append(comp)
            continue
        cut = _split(g, comp, limit, embedding, level_factor)
        sep |= cut
        pending.extend(_split_pieces(g, set(comp), cut))
    sep, done = _shrink(g, sep, done, limit)
    done.sort(key=lambda c: c[0])
    return SeparatorResult(
        separator=tuple(sorted(sep)),
        components=tuple(tuple(c) for c in done),
        epsilon=float(eps),
        limit=limit,
        size_budget_estimate=math.sqrt(n / float(eps)) if n else 0.0,
    )


def _rebalance(g: Graph, sep: set[int], where: dict[int, int], colors: list[int]) -> int:
    """Move separator edges off color 0 while that lowers the heaviest group.

    A separator vertex may hand all its edges into one neighboring component
    to that component's color: the vertex then sees color 0 and one more, and
    the component's vertices still see only their own color and 0.  Returns
    the number of edges moved.
    """
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    moved = 0
    for s in sorted(sep, key=lambda v: (-g.degree(v), v)):
        by_comp: dict[int, list[int]] = {}
        for w, e in g.adjacency[s]:
            if w not in sep:
                by_comp.setdefault(where[w], []).append(e)
        if not by_comp:
            continue
        c, es = max(by_comp.items(), key=lambda kv: (len(kv[1]), -kv[0]))
        k = len(es)
        if sizes.get(c, 0) + k <= sizes[0] - k:
            for e in es:
                colors[e] = c
            sizes[c] = sizes.get(c, 0) + k
            sizes[0] -= k
            moved += k
    return moved


def approx_planar(g: Graph, embedding=None, epsilon=None, rebalance: bool = True) -> SolveReport:
    """Separator coloring with ``eps = n^(-1/3)`` unless ``epsilon`` is given.

    With ``rebalance`` (the default) separator edges are then shifted into
    neighboring components' colors whenever that lowers the heaviest group;
    the value never gets worse than the plain separator coloring.
    """
    t0 = time.perf_counter()
    lower = best_lower_bound(g, 2)
    if g.n < EXACT_FALLBACK_MAX_N:
        if g.m <= EXACT_FALLBACK_MAX_M:
            rep = solve_exact(g, 2)
            col, fallback = rep.coloring, "exact"
        else:
            col, fallback = trivial_coloring(g).coloring, "trivial"
        value = group_sizes(col)[1]
        return SolveReport(value, col, "planar", lower, time.perf_counter() - t0,
                           extra={"fallback": fallback, "separator_size": 0,
                                  "num_components": 0, "epsilon_used": None,
                                  "ratio": value / lower if lower else None})
    eps = epsilon if epsilon is not None else g.n ** (-1 / 3)
    res = find_separator(g, eps, embedding)
    in_sep = set(res.separator)
    where = {v: 1 + i for i, comp in enumerate(res.components) for v in comp}
    # color 0 for separator edges, 1 + index for each component's internal edges
    colors = [0 if u in in_sep or v in in_sep else where[u] for u, v in g.edges]
    moved = _rebalance(g, in_sep, where, colors) if rebalance and g.m else 0
    col = canonicalize(colors) if g.m else EdgeColoring([])
    value = group_sizes(col)[1]
    return SolveReport(
        value, col, "planar", lower, time.perf_counter() - t0,
        extra={
            "separator_size": res.size,
            "num_components": len(res.components),
            "epsilon_used": res.epsilon,
            "component_limit": res.limit,
            "rebalanced_edges": moved,
            "ratio": value / lower if lower else None,
        },
    )
