"""Graph families with known optima or constructive 2-colorings.

Cliques, bicliques and hypercubes come with closed-form values and explicit
colorings; random trees, grids and random planar triangulations support the
solvers' test corpora.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import EdgeColoring, Graph, build_graph, canonicalize, group_sizes

FAMILIES = ("clique", "biclique", "hypercube", "random-tree", "grid", "random-planar")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        arity = {"biclique": 2, "grid": 2}.get(self.family, 1)
        if len(self.params) != arity:
            raise ValueError(f"{self.family} takes {arity} parameter(s)")
        if any(p < 1 for p in self.params):
            raise ValueError("family parameters must be positive")
        if self.family.startswith("random") and self.seed is None:
            raise ValueError(f"{self.family} needs an explicit seed")
        if self.family == "biclique" and self.params[0] < self.params[1]:
            object.__setattr__(self, "params", (self.params[1], self.params[0]))


@dataclass(frozen=True)
class PlanarInstance:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[float, float], ...]


def gen(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f == "clique":
        return clique(p[0])
    if f == "biclique":
        return biclique(*p)
    if f == "hypercube":
        return hypercube(p[0])
    if f == "random-tree":
        return random_tree(p[0], spec.seed)
    if f == "grid":
        return grid(*p)
    return random_planar(p[0], spec.seed).graph


def clique(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def biclique(m: int, n: int) -> Graph:
    """``K_{m,n}`` with side ``0..m-1`` and side ``m..m+n-1``."""
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(dim: int) -> Graph:
    return build_graph(1 << dim, [(x, x | (1 << b)) for x in range(1 << dim)
                                  for b in range(dim) if not x >> b & 1])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(rows: int, cols: int) -> Graph:
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return build_graph(rows * cols, pairs)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree (Pruefer sequence)."""
    rng = random.Random(seed)
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    pairs.append((u, w))
    return build_graph(n, pairs)


def random_planar(n: int, seed: int) -> PlanarInstance:
    """Delaunay triangulation of ``n`` seeded random points, with its rotation system.

    The straight-line drawing is planar, so sorting each vertex's neighbors by
    angle gives a valid combinatorial embedding.
    """
    import numpy as np
    from scipy.spatial import Delaunay

    if n < 3:
        g = path(n) if n else build_graph(0, [])
        rot = tuple(tuple(g.neighbors(v)) for v in range(n))
        return PlanarInstance(g, rot, tuple((float(v), 0.0) for v in range(n)))
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    pairs = set()
    for a, b, c in tri.simplices:
        for u, v in ((a, b), (b, c), (a, c)):
            pairs.add((int(min(u, v)), int(max(u, v))))
    g = build_graph(n, pairs)
    rot = []
    for v in range(n):
        x, y = pts[v]
        nbrs = g.neighbors(v)
        nbrs.sort(key=lambda w: math.atan2(pts[w][1] - y, pts[w][0] - x))
        rot.append(tuple(nbrs))
    coords = tuple((float(x), float(y)) for x, y in pts)
    return PlanarInstance(g, tuple(rot), coords)


# ---------------------------------------------------------------- cliques


def clique_opt_value(n: int) -> int:
    """Optimal q=2 value for ``K_n``, by residue of ``n`` mod 3."""
    if n < 2:
        raise ValueError("clique_opt_value needs n >= 2")
    edges = n * (n - 1) // 2
    third = -(-edges // 3)
    k, r = divmod(n, 3)
    if r == 0:
        return third
    if r == 1:
        return max(third, -(-5 * k * (k + 1) // 4))
    return max(third, (k + 1) ** 2)


def _clique_groups(n: int) -> list[list[int]]:
    k, r = divmod(n, 3)
    sizes = [k, k, k]
    for i in range(r):
        sizes[2 - i] += 1
    groups, start = [], 0
    for s in sizes:
        groups.append(list(range(start, start + s)))
        start += s
    return groups


def _balance_split(base: list[int], loads: list[int], pairs: list[tuple[int, int]]):
    """Split ``loads[g]`` units between the two colors ``pairs[g]`` to minimize the heaviest color.

    Returns ``(amount_to_first_color_per_group, max_load)``.  Exhaustive over
    the splits of the first two groups; the third is then balanced optimally
    in closed form.
    """
    best = None
    a, b, c = loads
    (xa, ya), (xb, yb), (xc, yc) = pairs
    for t in range(a + 1):
        for u in range(b + 1):
            size = list(base)
            size[xa] += t
            size[ya] += a - t
            size[xb] += u
            size[yb] += b - u
            # third group: put as much as possible on its lighter color
            lo, hi = (xc, yc) if size[xc] <= size[yc] else (yc, xc)
            gap = size[hi] - size[lo]
            first = min(c, gap)
            rest = c - first
            to_lo = first + (rest + 1) // 2
            to_hi = rest // 2
            size[lo] += to_lo
            size[hi] += to_hi
            v = max(size)
            amt_c = to_lo if lo == xc else to_hi
            if best is None or v < best[1]:
                best = ((t, u, amt_c), v)
    return best


def clique_coloring(n: int) -> EdgeColoring:
    """Three-color q=2 coloring of ``K_n`` attaining :func:`clique_opt_value`.

    Vertices are split into three near-equal groups; color ``i`` takes every
    edge between groups ``i`` and ``i+1``, and each group's internal edges are
    shared by its two colors so that the heaviest color is as light as possible.
    """
    if n < 3:
        raise ValueError("clique_coloring needs n >= 3")
    g = clique(n)
    groups = _clique_groups(n)
    where = {v: i for i, grp in enumerate(groups) for v in grp}
    # color i covers groups i and (i+1) % 3; group j lies in colors j-1 and j
    colors = [-1] * g.m
    base = [0, 0, 0]
    inside: list[list[int]] = [[], [], []]
    for e, (u, v) in enumerate(g.edges):
        gu, gv = where[u], where[v]
        if gu == gv:
            inside[gu].append(e)
        else:
            c = gu if (gu + 1) % 3 == gv else gv
            colors[e] = c
            base[c] += 1
    pairs = [(j, (j - 1) % 3) for j in range(3)]
    (amounts, _) = _balance_split(base, [len(x) for x in inside], pairs)
    for j in range(3):
        first, second = pairs[j]
        for idx, e in enumerate(inside[j]):
            colors[e] = first if idx < amounts[j] else second
    col = canonicalize(colors)
    value = group_sizes(col)[1]
    if value != clique_opt_value(n):
        raise AssertionError(
            f"clique construction for n={n} gives {value}, expected {clique_opt_value(n)}"
        )
    return col


# ---------------------------------------------------------------- bicliques


def biclique_bound(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("biclique sides must be >= 1")
    return -(-m * n // 4)


def _halves(vertices: list[int]) -> tuple[list[int], list[int]]:
    cut = (len(vertices) + 1) // 2
    return vertices[:cut], vertices[cut:]


def biclique_coloring(m: int, n: int) -> EdgeColoring:
    """Four blocks between halves of the two sides, one color per block.

    Sides are relabeled so the first has ``max(m, n)`` vertices, matching
    :func:`biclique`.  A side of size 1 has one empty half; the star is then
    split between the two remaining blocks.
    """
    if m < 1 or n < 1:
        raise ValueError("biclique sides must be >= 1")
    m, n = max(m, n), min(m, n)
    g = biclique(m, n)
    h1 = _halves(list(range(m)))
    h2 = _halves(list(range(m, m + n)))
    block = {}
    for i, a in enumerate(h1):
        for j, b in enumerate(h2):
            for u in a:
                for v in b:
                    block[(u, v)] = 2 * i + j
    return canonicalize([block[e] for e in g.edges])


# ---------------------------------------------------------------- hypercubes


def hypercube_bound(dim: int) -> tuple[float, int]:
    """``(dim/2) * 2^(dim/2 - 1)`` as a float and its ceiling."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if dim % 2 == 0:
        exact = Fraction(dim, 2) * Fraction(2) ** (dim // 2 - 1)
        return float(exact), math.ceil(exact)
    val = dim / 2 * 2 ** (dim / 2 - 1)
    # 2^(dim/2) is irrational for odd dim, so the ceiling never lands on an integer
    return val, math.ceil(val)


def hypercube_coloring(dim: int) -> EdgeColoring:
    """q=2 coloring of ``Q_dim`` by subcubes.

    Even ``dim = 2h``: fixing the high half of the bits gives ``2^h`` disjoint
    ``h``-cubes, fixing the low half gives ``2^h`` more; one color each.
    Odd ``dim = 2h+1``: the top bit splits two identically colored ``Q_2h``
    copies and each color adds ``2^(h-1)`` of the matching edges.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    g = hypercube(dim)
    h = dim // 2
    low_mask = (1 << h) - 1
    side = 1 << h

    def sub_color(x: int, bit: int) -> int:
        # bit < h moves inside the low half: the high half is fixed
        low, high = x & low_mask, (x >> h) & low_mask
        return high if bit < h else side + low

    raw = []
    for u, v in g.edges:
        bit = (u ^ v).bit_length() - 1
        if bit < 2 * h:
            raw.append(sub_color(u, bit))
        elif h == 0:
            raw.append(0)
        else:
            low, high = u & low_mask, (u >> h) & low_mask
            parity = (bin(low).count("1") + bin(high).count("1")) & 1
            # even parity joins the high-fixed cube, odd the low-fixed one
            raw.append(high if parity == 0 else side + low)
    return canonicalize(raw)


def hypercube_coloring_value(dim: int) -> int:
    if dim == 1:
        return 1
    h = dim // 2
    if dim % 2 == 0:
        return h * 2 ** (h - 1)
    return (2 * h + 1) * 2 ** (h - 1)


def subgraph_edge_bound(k: int) -> float:
    """Most edges a ``k``-vertex subgraph of a hypercube can have: ``(k/2) log2 k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return k / 2 * math.log2(k)
