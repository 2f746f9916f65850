"""Graph and coloring data model, feasibility checks and degree statistics."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class ColoringLengthError(ValueError):
    """Coloring does not have exactly one color per edge."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges[i]`` is the pair ``(u, v)`` with ``u < v`` for edge id ``i``;
    ``adjacency[v]`` lists ``(neighbor, edge_id)`` in edge-id order.
    Build instances with :func:`build_graph`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and return the canonical graph.

    Edge ids follow the sorted order of the normalized ``(min, max)`` pairs.
    Self-loops, repeated pairs and out-of-range ids raise distinct errors.
    """
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
    edges = tuple(sorted(seen))
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return Graph(n, edges, tuple(tuple(a) for a in adj))


@dataclass(frozen=True)
class QSpec:
    """Color budget: a uniform ``q`` or one budget per vertex."""

    uniform: int | None = None
    per_vertex: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.uniform is None) == (self.per_vertex is None):
            raise ValueError("QSpec needs exactly one of uniform / per_vertex")
        if self.uniform is not None and self.uniform < 1:
            raise ValueError(f"color budget must be >= 1, got {self.uniform}")
        if self.per_vertex is not None and any(q < 1 for q in self.per_vertex):
            raise ValueError("every per-vertex color budget must be >= 1")

    @classmethod
    def of(cls, q: int) -> QSpec:
        return cls(uniform=int(q))

    @classmethod
    def general(cls, budgets: Iterable[int]) -> QSpec:
        return cls(per_vertex=tuple(int(q) for q in budgets))

    @property
    def is_uniform(self) -> bool:
        return self.uniform is not None

    def budgets(self, n: int) -> list[int]:
        if self.uniform is not None:
            return [self.uniform] * n
        if len(self.per_vertex) != n:
            raise ValueError(f"QSpec has {len(self.per_vertex)} budgets for {n} vertices")
        return list(self.per_vertex)

    def __call__(self, v: int) -> int:
        return self.uniform if self.uniform is not None else self.per_vertex[v]


def as_qspec(q: QSpec | int) -> QSpec:
    return q if isinstance(q, QSpec) else QSpec.of(q)


@dataclass(frozen=True)
class EdgeColoring:
    """One color id per edge id; ids are dense non-negative integers."""

    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        object.__setattr__(self, "colors", tuple(int(c) for c in colors))
        if any(c < 0 for c in self.colors):
            raise ValueError("color ids must be non-negative")

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, i: int) -> int:
        return self.colors[i]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class SolveReport:
    value: int
    coloring: EdgeColoring
    method: str
    lower_bound: int
    elapsed: float = 0.0
    proven: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if group_sizes(self.coloring)[1] != self.value:
            raise ValueError("report value does not match its coloring")
        if self.lower_bound > self.value:
            raise ValueError(f"lower bound {self.lower_bound} exceeds value {self.value}")

    def to_document(self) -> dict:
        doc = {
            "value": self.value,
            "method": self.method,
            "colors": list(self.coloring.colors),
            "lower_bound": self.lower_bound,
        }
        doc.update(self.extra)
        return doc


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    counts: tuple[int, ...]
    violations: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.feasible


def incident_colors(g: Graph, col: EdgeColoring) -> list[set[int]]:
    return [{col[e] for _, e in g.adjacency[v]} for v in range(g.n)]


def validate(g: Graph, qs: QSpec | int, col: EdgeColoring) -> FeasibilityResult:
    """Check every vertex sees at most its budget of distinct colors."""
    if len(col) != g.m:
        raise ColoringLengthError(f"coloring has {len(col)} entries, graph has {g.m} edges")
    qs = as_qspec(qs)
    budgets = qs.budgets(g.n)
    counts = tuple(len(s) for s in incident_colors(g, col))
    bad = tuple(v for v in range(g.n) if counts[v] > budgets[v])
    return FeasibilityResult(not bad, counts, bad)


def group_sizes(col: EdgeColoring | Sequence[int]) -> tuple[dict[int, int], int]:
    sizes = dict(Counter(col))
    return sizes, max(sizes.values(), default=0)


def degree_stats(g: Graph) -> tuple[int, Fraction]:
    """Maximum degree and exact average degree ``2m/n``."""
    if g.n < 1:
        raise ValueError("degree statistics need at least one vertex")
    return max(g.degrees()), Fraction(2 * g.m, g.n)


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted, ordered by smallest id."""
    gone = set(removed)
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s] or s in gone:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if not seen[w] and w not in gone:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def canonicalize(col: EdgeColoring | Sequence[int]) -> EdgeColoring:
    """Relabel colors by first occurrence in edge-id order."""
    relabel: dict[int, int] = {}
    out = []
    for c in col:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return EdgeColoring(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns it with the new-to-old vertex map."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    pairs = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return build_graph(len(keep), pairs), keep


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
