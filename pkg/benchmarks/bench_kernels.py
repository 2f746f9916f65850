"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload runs on both backends; results must agree before timings are
reported.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from qcolor import _pycore
from qcolor.families import biclique, clique, hypercube
from qcolor.oracle import _instance_lower_bound, _problem
from qcolor.graph import QSpec

try:
    from qcolor import _core
except ImportError:
    _core = None


def _search_args(g, q=2):
    qs = QSpec.of(q)
    prob = _problem(g, qs, "input")
    return prob.budgets, prob.weights, prob.members, g.m, _instance_lower_bound(g, qs, prob)


def workloads():
    for name, g in (("optimize K6", clique(6)), ("optimize K7", clique(7)), ("optimize K8", clique(8)),
                    ("optimize K33", biclique(3, 3)), ("optimize Q3", hypercube(3))):
        args = _search_args(g)
        yield name, lambda mod, a=args: mod.optimize(*a)[:3]
    args = _search_args(clique(5))
    yield "enumerate K5", lambda mod, a=args: mod.enumerate_colorings(a[0], a[1], a[2], a[3])[0]

    rng = random.Random(0)
    cases = [([rng.randint(1, 30) for _ in range(15)], rng.randint(10, 200)) for _ in range(2000)]
    yield "knapsack x2000", lambda mod: [mod.knapsack_max(i, c) for i, c in cases]


def timed(fn, repeat):
    runs = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        runs.append(time.perf_counter() - t0)
    return result, statistics.median(runs)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print machine-readable rows")
    args = ap.parse_args(argv)
    if _core is None:
        print("compiled core not built; run: pip install -e . --no-build-isolation", file=sys.stderr)
        return 1
    rows = []
    for name, fn in workloads():
        slow_res, slow = timed(lambda: fn(_pycore), args.repeat)
        fast_res, fast = timed(lambda: fn(_core), args.repeat)
        if slow_res != fast_res:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        rows.append({"workload": name, "python_s": slow, "cython_s": fast,
                     "speedup": slow / fast if fast else float("inf")})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':<16} {'python':>10} {'cython':>10} {'speedup':>8}")
        for r in rows:
            print(f"{r['workload']:<16} {r['python_s']:>9.4f}s {r['cython_s']:>9.4f}s "
                  f"{r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
