"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (infeasible coloring, disagreeing
reduction), 2 unreadable or malformed input, 3 method not applicable to the
input, 4 time budget ran out before optimality was proven (the incumbent is
still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families
from .bounds import NotATreeError, bound_report, trivial_coloring
from .dot import to_dot
from .graph import ColoringLengthError, QSpec, is_tree, validate
from .io import (
    FormatError,
    coloring_document,
    format_graph,
    parse_embedding,
    parse_formula,
    read_coloring,
    read_graph,
    roles_document,
)
from .oracle import DEFAULT_MAX_UNITS, InstanceTooLarge, solve_exact
from .planar import approx_planar
from .reduction import FormulaError, check_equivalence, reduce_general, reduce_uniform
from .tree import solve_tree

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_PAIRING = 3
EXIT_BUDGET = 4

METHODS = ("auto", "tree", "exact", "planar", "trivial")


class PairingError(Exception):
    """The requested method cannot run on this input."""


def _err(msg: str):
    print(f"qcolor: {msg}", file=sys.stderr)


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _qspec(inst, q: int | None) -> QSpec:
    return inst.qspec if q is None else QSpec.of(q)


def _epsilon(text: str):
    if text == "auto":
        return None
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"epsilon must be 'auto' or a rational, got {text!r}") from None
    if not 0 < eps <= 1:
        raise FormatError("epsilon must lie in (0, 1]")
    return eps


# ---------------------------------------------------------------- gen


def cmd_gen(args) -> int:
    params = tuple(args.params)
    try:
        spec = families.FamilySpec(args.family, params, args.seed)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    rotation = None
    if spec.family == "random-planar":
        inst = families.random_planar(params[0], spec.seed)
        g = inst.graph
        if args.with_embedding:
            rotation = inst.rotation
    else:
        if args.with_embedding:
            _err("--with-embedding only applies to random-planar")
            return EXIT_INPUT
        g = families.gen(spec)
    _write(format_graph(g, args.q, rotation), args.output)
    return EXIT_OK


# ---------------------------------------------------------------- solve


def _pick_method(g, qs: QSpec, rotation, guard) -> str:
    if qs.uniform == 2 and g.m > 0 and is_tree(g):
        return "tree"
    if qs.uniform == 2 and rotation is not None:
        return "planar"
    if guard is None or g.m <= guard:
        return "exact"
    return "trivial"


def run_solve(g, qs: QSpec, method: str, *, rotation=None, max_edges=DEFAULT_MAX_UNITS,
              time_budget=None, order="input", epsilon=None, linear_scan=False,
              rebalance=True):
    """Dispatch to a solver; raises :class:`PairingError` for unusable pairings."""
    if method == "auto":
        method = _pick_method(g, qs, rotation, max_edges)
    if method in ("tree", "planar") and qs.uniform != 2:
        raise PairingError(f"method {method!r} needs uniform q=2")
    if method == "tree":
        try:
            return solve_tree(g, linear_scan=linear_scan)
        except NotATreeError as exc:
            raise PairingError(str(exc)) from exc
        except ValueError as exc:
            raise PairingError(str(exc)) from exc
    if method == "planar":
        return approx_planar(g, rotation, epsilon, rebalance=rebalance)
    if method == "exact":
        try:
            return solve_exact(g, qs, max_edges=max_edges, time_budget=time_budget, order=order)
        except InstanceTooLarge as exc:
            raise PairingError(str(exc)) from exc
    if method == "trivial":
        if not qs.is_uniform:
            raise PairingError("trivial method reports bounds for uniform q only")
        return trivial_coloring(g, qs.uniform)
    raise PairingError(f"unknown method {method!r}")


def cmd_solve(args) -> int:
    try:
        inst = read_graph(args.graph)
        rotation = inst.rotation
        if args.embedding:
            with open(args.embedding, encoding="utf-8") as fh:
                rotation = parse_embedding(fh.read(), inst.graph.n)
        eps = _epsilon(args.epsilon)
    except (FormatError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    qs = _qspec(inst, args.q)
    guard = None if args.max_edges <= 0 else args.max_edges
    try:
        rep = run_solve(inst.graph, qs, args.method, rotation=rotation, max_edges=guard,
                        time_budget=args.time_budget, order=args.order, epsilon=eps,
                        linear_scan=args.audit_linear_scan,
                        rebalance=not args.no_rebalance)
    except PairingError as exc:
        _err(str(exc))
        return EXIT_PAIRING
    if args.format == "dot":
        _write(to_dot(inst.graph, rep.coloring), args.output)
    elif args.format == "raw":
        _write(" ".join(map(str, rep.coloring.colors)) + "\n", args.output)
    else:
        _write(coloring_document(rep), args.output)
    return EXIT_OK if rep.proven else EXIT_BUDGET


# ---------------------------------------------------------------- bounds / validate / dot


def cmd_bounds(args) -> int:
    try:
        inst = read_graph(args.graph)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_INPUT
    qs = _qspec(inst, args.q)
    if not qs.is_uniform:
        _err("bounds need a uniform q; pass --q")
        return EXIT_PAIRING
    print(json.dumps(bound_report(inst.graph, qs.uniform).to_document(), indent=2))
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        inst = read_graph(args.graph)
        col = read_coloring(args.coloring)
        res = validate(inst.graph, _qspec(inst, args.q), col)
    except (FormatError, ColoringLengthError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    if res:
        print("feasible")
        return EXIT_OK
    v = res.violations[0]
    print(f"infeasible: vertex {v} sees {res.counts[v]} colors")
    return EXIT_NEGATIVE


def cmd_export_dot(args) -> int:
    try:
        inst = read_graph(args.graph)
        col = read_coloring(args.coloring)
        text = to_dot(inst.graph, col)
    except (FormatError, ColoringLengthError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    _write(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------- reductions


def _read_formula(path):
    with open(path, encoding="utf-8") as fh:
        return parse_formula(fh.read())


def cmd_reduce(args) -> int:
    try:
        phi = _read_formula(args.formula)
        if args.uniform is not None:
            art = reduce_uniform(phi, args.uniform, args.scale)
        else:
            if args.scale is not None:
                raise FormulaError("--scale only applies with --uniform")
            art = reduce_general(phi)
    except (FormatError, FormulaError, OSError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    _write(format_graph(art.graph, art.qspec), args.output)
    if args.roles:
        _write(roles_document(art), args.roles)
    return EXIT_OK


def cmd_check_reduction(args) -> int:
    try:
        phi = _read_formula(args.formula)
        res = check_equivalence(phi, max_units=args.max_edges)
    except (FormatError, FormulaError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except InstanceTooLarge as exc:
        _err(str(exc))
        return EXIT_PAIRING
    doc = {
        "sat": res.sat,
        "opt": res.opt,
        "L": res.L,
        "verdict": res.verdict,
        "assignment": list(res.assignment) if res.assignment is not None else None,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if res.agree else EXIT_NEGATIVE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcolor", description="Min-max edge q-coloring tools.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family instance")
    s.add_argument("family", choices=families.FAMILIES)
    s.add_argument("params", nargs="+", type=int)
    s.add_argument("--seed", type=int, help="required for random families")
    s.add_argument("--with-embedding", action="store_true",
                   help="append the rotation system (random-planar only)")
    s.add_argument("--q", type=int, default=2, help="budget written to the header")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve an instance")
    s.add_argument("graph")
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--q", type=int, help="override the file's budget with a uniform q")
    s.add_argument("--max-edges", type=int, default=DEFAULT_MAX_UNITS,
                   help="exact-search guard on branching units (0 disables)")
    s.add_argument("--time-budget", type=float, help="seconds for the exact search")
    s.add_argument("--order", choices=("input", "degree"), default="input")
    s.add_argument("--epsilon", default="auto", help="'auto' or a rational such as 1/4")
    s.add_argument("--embedding", help="file with 'r' rotation lines")
    s.add_argument("--audit-linear-scan", action="store_true",
                   help="tree solver scans bounds upward instead of binary search")
    s.add_argument("--no-rebalance", action="store_true",
                   help="planar method: keep every separator edge on one color")
    s.add_argument("--format", choices=("report", "dot", "raw"), default="report")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("bounds", help="print lower bounds")
    s.add_argument("graph")
    s.add_argument("--q", type=int)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("validate", help="check a coloring against a graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--q", type=int)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("reduce", help="build an instance from a one-in-three formula")
    s.add_argument("formula")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--general", action="store_true")
    mode.add_argument("--uniform", type=int, metavar="Q")
    s.add_argument("--scale", type=int, metavar="L", help="star threshold override")
    s.add_argument("--roles", help="write the vertex-role document here")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("export-dot", help="render a coloring as Graphviz DOT")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("check-reduction", help="compare satisfiability with the reduction optimum")
    s.add_argument("formula")
    s.add_argument("--max-edges", type=int, default=DEFAULT_MAX_UNITS)
    s.set_defaults(func=cmd_check_reduction)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
