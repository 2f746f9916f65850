"""Text formats: graph instances, coloring documents, formulas, embeddings.

Graph instance::

    p qcolor <n> <m> <q>            # uniform budget
    p qcolor-general <n> <m>        # per-vertex budgets, followed by
    q <q_0> ... <q_{n-1}>
    e <u> <v>                       # m lines, 0-based
    r <v> <w_1> ... <w_k>           # optional rotation system

Blank lines and ``#`` comments are ignored.  Coloring documents are JSON
objects with ``value``, ``method``, ``colors`` and ``lower_bound``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import EdgeColoring, Graph, GraphError, QSpec, build_graph
from .reduction import MonotoneFormula, ReductionArtifact


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    graph: Graph
    qspec: QSpec
    rotation: tuple[tuple[int, ...], ...] | None = None


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {no}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Instance:
    header = None
    budgets = None
    pairs = []
    rot: dict[int, tuple[int, ...]] = {}
    for no, tok in _lines(text):
        kind = tok[0]
        if kind == "p":
            if header is not None:
                raise FormatError(f"line {no}: second problem line")
            if len(tok) == 5 and tok[1] == "qcolor":
                n, m, q = _ints(tok[2:], no)
                header = (n, m, q)
            elif len(tok) == 4 and tok[1] == "qcolor-general":
                n, m = _ints(tok[2:], no)
                header = (n, m, None)
            else:
                raise FormatError(f"line {no}: malformed problem line")
        elif header is None:
            raise FormatError(f"line {no}: data before the problem line")
        elif kind == "q":
            if header[2] is not None or budgets is not None:
                raise FormatError(f"line {no}: unexpected budget line")
            budgets = _ints(tok[1:], no)
        elif kind == "e":
            if len(tok) != 3:
                raise FormatError(f"line {no}: edge lines take two vertices")
            pairs.append(tuple(_ints(tok[1:], no)))
        elif kind == "r":
            vals = _ints(tok[1:], no)
            if not vals:
                raise FormatError(f"line {no}: empty rotation line")
            rot[vals[0]] = tuple(vals[1:])
        else:
            raise FormatError(f"line {no}: unknown line type {kind!r}")
    if header is None:
        raise FormatError("missing problem line")
    n, m, q = header
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        g = build_graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    if q is None:
        if budgets is None or len(budgets) != n:
            raise FormatError("general instance needs one budget per vertex")
        qs = QSpec.general(budgets)
    else:
        qs = QSpec.of(q)
    rotation = None
    if rot:
        rotation = tuple(rot.get(v, ()) for v in range(n))
        for v in range(n):
            if sorted(rotation[v]) != sorted(g.neighbors(v)):
                raise FormatError(f"rotation of vertex {v} does not list its neighbors")
    return Instance(g, qs, rotation)


def format_graph(g: Graph, qs: QSpec | int = 2, rotation=None) -> str:
    qs = qs if isinstance(qs, QSpec) else QSpec.of(qs)
    out = []
    if qs.is_uniform:
        out.append(f"p qcolor {g.n} {g.m} {qs.uniform}")
    else:
        out.append(f"p qcolor-general {g.n} {g.m}")
        out.append("q " + " ".join(map(str, qs.budgets(g.n))))
    out += [f"e {u} {v}" for u, v in g.edges]
    if rotation is not None:
        out += ["r " + " ".join(map(str, (v, *rotation[v]))) for v in range(g.n)]
    return "\n".join(out) + "\n"


def read_graph(path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def parse_embedding(text: str, n: int) -> tuple[tuple[int, ...], ...]:
    rot: dict[int, tuple[int, ...]] = {}
    for no, tok in _lines(text):
        if tok[0] != "r":
            continue
        vals = _ints(tok[1:], no)
        rot[vals[0]] = tuple(vals[1:])
    return tuple(rot.get(v, ()) for v in range(n))


def coloring_document(report) -> str:
    return json.dumps(report.to_document(), indent=2) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    """Accepts a coloring document or a bare whitespace-separated list of colors."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            return EdgeColoring(doc["colors"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad coloring document: {exc}") from exc
    try:
        return EdgeColoring(int(t) for t in stripped.split())
    except ValueError as exc:
        raise FormatError(f"bad coloring list: {exc}") from exc


def read_coloring(path) -> EdgeColoring:
    try:
        return parse_coloring(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def parse_formula(text: str) -> MonotoneFormula:
    header = None
    clauses = []
    for no, tok in _lines(text):
        if tok[0] == "f":
            if len(tok) != 3:
                raise FormatError(f"line {no}: formula header is 'f <n_vars> <n_clauses>'")
            header = _ints(tok[1:], no)
        elif tok[0] == "c":
            if header is None:
                raise FormatError(f"line {no}: clause before header")
            if len(tok) != 4:
                raise FormatError(f"line {no}: clauses have three variables")
            clauses.append(_ints(tok[1:], no))
        else:
            raise FormatError(f"line {no}: unknown line type {tok[0]!r}")
    if header is None:
        raise FormatError("missing formula header")
    if len(clauses) != header[1]:
        raise FormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return MonotoneFormula(header[0], clauses)


def format_formula(phi: MonotoneFormula) -> str:
    out = [f"f {phi.n_vars} {phi.m}"] + [f"c {i} {j} {k}" for i, j, k in phi.clauses]
    return "\n".join(out) + "\n"


def roles_document(art: ReductionArtifact) -> str:
    doc = {
        "L": art.L,
        "uniform_q": art.qspec.uniform,
        "faithful": art.faithful,
        "star_L": art.star_L,
        "f": art.f,
        "clauses": list(art.clause_vertices),
        "a": list(art.a),
        "b": list(art.b),
        "v": list(art.v),
        "star_centers": list(art.star_centers),
        "roles": list(art.roles),
    }
    return json.dumps(doc, indent=2) + "\n"
