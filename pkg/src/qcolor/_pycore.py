"""Pure-Python kernels: subset-sum knapsack and the class-coloring search.

The compiled module ``qcolor._core`` implements the same functions with the
same visiting order, so both backends return identical witnesses.

Search problem: items ("classes") ``0..K-1`` carry a weight and a member
vertex list.  Every class receives one color; a vertex may see at most
``budgets[v]`` distinct colors over the classes containing it.  The weight
of a color is the sum of its classes' weights.  Colors are introduced in
first-occurrence order, so each partition is visited exactly once.
"""

from __future__ import annotations

import sys
import time

CHECK_EVERY = 4096


def knapsack_max(items, capacity):
    """Max subset sum of ``items`` not exceeding ``capacity``.

    Returns ``(indices, total)``; among optimal subsets the lexicographically
    smallest sorted index tuple is chosen.
    """
    n = len(items)
    capacity = max(int(capacity), 0)
    # reach[i] = bitmask of sums achievable using items[i:]
    full = (1 << (capacity + 1)) - 1
    reach = [0] * (n + 1)
    reach[n] = 1
    for i in range(n - 1, -1, -1):
        reach[i] = (reach[i + 1] | (reach[i + 1] << items[i])) & full
    total = reach[0].bit_length() - 1
    chosen = []
    rest = total
    for i in range(n):
        w = items[i]
        if w <= rest and (reach[i + 1] >> (rest - w)) & 1:
            chosen.append(i)
            rest -= w
    return tuple(chosen), total


class _State:
    __slots__ = (
        "budgets", "weights", "members", "K", "cnt", "vcols", "used", "size",
        "assign", "remaining", "ncolors", "nodes", "deadline", "timed_out",
        "node_limit",
    )

    def __init__(self, budgets, weights, members, deadline, node_limit):
        n = len(budgets)
        K = len(weights)
        self.budgets = list(budgets)
        self.weights = list(weights)
        self.members = [list(ms) for ms in members]
        self.K = K
        self.cnt = [[0] * max(K, 1) for _ in range(n)]
        self.vcols = [[] for _ in range(n)]
        self.used = [0] * n
        self.size = [0] * max(K, 1)
        self.assign = [-1] * K
        # unassigned weight touching each vertex
        self.remaining = [0] * n
        for i in range(K):
            for v in self.members[i]:
                self.remaining[v] += self.weights[i]
        self.ncolors = 0
        self.nodes = 0
        self.deadline = deadline
        self.timed_out = False
        self.node_limit = node_limit

    def tick(self):
        self.nodes += 1
        if self.nodes % CHECK_EVERY == 0:
            if self.deadline is not None and time.perf_counter() > self.deadline:
                self.timed_out = True
            if self.node_limit and self.nodes >= self.node_limit:
                self.timed_out = True
        return self.timed_out

    def fits(self, i, c, fresh):
        budgets, used, cnt = self.budgets, self.used, self.cnt
        for v in self.members[i]:
            if (fresh or cnt[v][c] == 0) and used[v] >= budgets[v]:
                return False
        return True

    def place(self, i, c):
        w = self.weights[i]
        self.assign[i] = c
        self.size[c] += w
        for v in self.members[i]:
            if self.cnt[v][c] == 0:
                self.used[v] += 1
                self.vcols[v].append(c)
            self.cnt[v][c] += 1
            self.remaining[v] -= w

    def unplace(self, i, c):
        w = self.weights[i]
        self.assign[i] = -1
        self.size[c] -= w
        for v in self.members[i]:
            self.cnt[v][c] -= 1
            if self.cnt[v][c] == 0:
                self.used[v] -= 1
                self.vcols[v].pop()
            self.remaining[v] += w

    def slack_ok(self, i, cap):
        # every class still touching v must land in one of v's colors
        size = self.size
        for v in self.members[i]:
            need = self.remaining[v]
            if need == 0:
                continue
            room = (self.budgets[v] - self.used[v]) * cap
            for c in self.vcols[v]:
                room += cap - size[c]
            if need > room:
                return False
        return True


def optimize(budgets, weights, members, upper, lower, deadline=None, node_limit=0):
    """Smallest achievable max color weight below ``upper``.

    Returns ``(value, assignment or None, proven, nodes)``.  ``value`` equals
    ``upper`` with ``assignment`` None if nothing better than ``upper`` exists
    (or was found before the deadline).  The search stops early once the value
    reaches ``lower``.
    """
    st = _State(budgets, weights, members, deadline, node_limit)
    K = st.K
    best = [int(upper), None]
    if K == 0 or best[0] <= lower:
        return best[0], None, True, 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * K + 1000))
    weights_ = st.weights

    def rec(i, cur_max):
        if st.tick():
            return True
        if i == K:
            best[0] = cur_max
            best[1] = list(st.assign)
            return cur_max <= lower
        cap = best[0] - 1
        w = weights_[i]
        if w > cap:
            return False
        k = st.ncolors
        for c in range(k + 1):
            fresh = c == k
            if fresh and k >= K:
                break
            if st.size[c] + w > cap:
                continue
            if not st.fits(i, c, fresh):
                continue
            st.place(i, c)
            if fresh:
                st.ncolors += 1
            stop = False
            if st.slack_ok(i, cap):
                stop = rec(i + 1, max(cur_max, st.size[c]))
            if fresh:
                st.ncolors -= 1
            st.unplace(i, c)
            if stop:
                return True
            cap = best[0] - 1
            if w > cap:
                return False
        return False

    rec(0, 0)
    return best[0], best[1], not st.timed_out, st.nodes


def enumerate_colorings(budgets, weights, members, cap, collect=False, node_limit=0):
    """Count (and optionally collect) every feasible class coloring with max weight <= ``cap``."""
    st = _State(budgets, weights, members, None, node_limit)
    K = st.K
    out = []
    count = 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * K + 1000))

    def rec(i):
        nonlocal count
        if st.tick():
            return
        if i == K:
            count += 1
            if collect:
                out.append(list(st.assign))
            return
        w = st.weights[i]
        if w > cap:
            return
        k = st.ncolors
        for c in range(k + 1):
            fresh = c == k
            if fresh and k >= K:
                break
            if st.size[c] + w > cap:
                continue
            if not st.fits(i, c, fresh):
                continue
            st.place(i, c)
            if fresh:
                st.ncolors += 1
            if st.slack_ok(i, cap):
                rec(i + 1)
            if fresh:
                st.ncolors -= 1
            st.unplace(i, c)

    rec(0)
    if st.timed_out:
        raise RuntimeError("enumeration node limit reached")
    return count, out
