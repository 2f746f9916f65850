# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts and visiting order as ``qcolor._pycore``."""

from libc.stdlib cimport malloc, calloc, free
from time import perf_counter

cdef enum:
    CHECK_EVERY = 4096


def knapsack_max(items, capacity):
    cdef Py_ssize_t n = len(items)
    cdef long cap = capacity if capacity > 0 else 0
    cdef long i, s, w, rest
    cdef long width = cap + 1
    cdef char *reach = <char *> calloc((n + 1) * width, sizeof(char))
    cdef long *ws = <long *> malloc((n + 1) * sizeof(long))
    if reach == NULL or ws == NULL:
        free(reach)
        free(ws)
        raise MemoryError()
    try:
        for i in range(n):
            ws[i] = items[i]
        reach[n * width] = 1
        for i in range(n - 1, -1, -1):
            w = ws[i]
            for s in range(width):
                if reach[(i + 1) * width + s] or (s >= w and reach[(i + 1) * width + s - w]):
                    reach[i * width + s] = 1
        total = 0
        for s in range(cap, -1, -1):
            if reach[s]:
                total = s
                break
        chosen = []
        rest = total
        for i in range(n):
            w = ws[i]
            if w <= rest and reach[(i + 1) * width + rest - w]:
                chosen.append(i)
                rest -= w
        return tuple(chosen), total
    finally:
        free(reach)
        free(ws)


cdef class _Search:
    cdef int n, K, ncolors, timed_out, collect
    cdef long nodes, node_limit, best, lower, cap_fixed, count
    cdef double deadline
    cdef int has_deadline
    cdef int *budgets
    cdef long *weights
    cdef int *mptr
    cdef int *mem
    cdef int *cnt
    cdef int *vcols
    cdef int *used
    cdef long *size
    cdef int *assign
    cdef long *remaining
    cdef object best_assign
    cdef object out

    def __cinit__(self, budgets, weights, members):
        cdef int i, j, v, total
        self.n = len(budgets)
        self.K = len(weights)
        cdef int K1 = self.K if self.K > 0 else 1
        total = 0
        for ms in members:
            total += len(ms)
        self.budgets = <int *> calloc(self.n + 1, sizeof(int))
        self.weights = <long *> calloc(K1, sizeof(long))
        self.mptr = <int *> calloc(self.K + 1, sizeof(int))
        self.mem = <int *> calloc(total + 1, sizeof(int))
        self.cnt = <int *> calloc((self.n + 1) * K1, sizeof(int))
        self.vcols = <int *> calloc((self.n + 1) * K1, sizeof(int))
        self.used = <int *> calloc(self.n + 1, sizeof(int))
        self.size = <long *> calloc(K1, sizeof(long))
        self.assign = <int *> calloc(K1, sizeof(int))
        self.remaining = <long *> calloc(self.n + 1, sizeof(long))
        if (self.budgets == NULL or self.weights == NULL or self.mptr == NULL
                or self.mem == NULL or self.cnt == NULL or self.vcols == NULL
                or self.used == NULL or self.size == NULL or self.assign == NULL
                or self.remaining == NULL):
            raise MemoryError()
        for v in range(self.n):
            self.budgets[v] = budgets[v]
        j = 0
        for i in range(self.K):
            self.weights[i] = weights[i]
            self.assign[i] = -1
            self.mptr[i] = j
            for v in members[i]:
                self.mem[j] = v
                self.remaining[v] += self.weights[i]
                j += 1
        self.mptr[self.K] = j
        self.ncolors = 0
        self.nodes = 0
        self.timed_out = 0
        self.has_deadline = 0
        self.node_limit = 0
        self.best_assign = None
        self.out = []
        self.count = 0

    def __dealloc__(self):
        free(self.budgets)
        free(self.weights)
        free(self.mptr)
        free(self.mem)
        free(self.cnt)
        free(self.vcols)
        free(self.used)
        free(self.size)
        free(self.assign)
        free(self.remaining)

    cdef inline int tick(self):
        self.nodes += 1
        if self.nodes % CHECK_EVERY == 0:
            if self.has_deadline and perf_counter() > self.deadline:
                self.timed_out = 1
            if self.node_limit and self.nodes >= self.node_limit:
                self.timed_out = 1
        return self.timed_out

    cdef inline int fits(self, int i, int c, int fresh):
        cdef int j, v
        for j in range(self.mptr[i], self.mptr[i + 1]):
            v = self.mem[j]
            if (fresh or self.cnt[v * self.K + c] == 0) and self.used[v] >= self.budgets[v]:
                return 0
        return 1

    cdef inline void place(self, int i, int c):
        cdef int j, v
        cdef long w = self.weights[i]
        self.assign[i] = c
        self.size[c] += w
        for j in range(self.mptr[i], self.mptr[i + 1]):
            v = self.mem[j]
            if self.cnt[v * self.K + c] == 0:
                self.vcols[v * self.K + self.used[v]] = c
                self.used[v] += 1
            self.cnt[v * self.K + c] += 1
            self.remaining[v] -= w

    cdef inline void unplace(self, int i, int c):
        cdef int j, v
        cdef long w = self.weights[i]
        self.assign[i] = -1
        self.size[c] -= w
        for j in range(self.mptr[i], self.mptr[i + 1]):
            v = self.mem[j]
            self.cnt[v * self.K + c] -= 1
            if self.cnt[v * self.K + c] == 0:
                self.used[v] -= 1
            self.remaining[v] += w

    cdef inline int slack_ok(self, int i, long cap):
        cdef int j, v, t
        cdef long need, room
        for j in range(self.mptr[i], self.mptr[i + 1]):
            v = self.mem[j]
            need = self.remaining[v]
            if need == 0:
                continue
            room = (self.budgets[v] - self.used[v]) * cap
            for t in range(self.used[v]):
                room += cap - self.size[self.vcols[v * self.K + t]]
            if need > room:
                return 0
        return 1

    cdef list snapshot(self):
        cdef int i
        return [self.assign[i] for i in range(self.K)]

    cdef int opt_rec(self, int i, long cur_max):
        cdef long cap, w, nm
        cdef int k, c, fresh, stop
        if self.tick():
            return 1
        if i == self.K:
            self.best = cur_max
            self.best_assign = self.snapshot()
            return cur_max <= self.lower
        cap = self.best - 1
        w = self.weights[i]
        if w > cap:
            return 0
        k = self.ncolors
        for c in range(k + 1):
            fresh = c == k
            if fresh and k >= self.K:
                break
            if self.size[c] + w > cap:
                continue
            if not self.fits(i, c, fresh):
                continue
            self.place(i, c)
            if fresh:
                self.ncolors += 1
            stop = 0
            if self.slack_ok(i, cap):
                nm = cur_max if cur_max > self.size[c] else self.size[c]
                stop = self.opt_rec(i + 1, nm)
            if fresh:
                self.ncolors -= 1
            self.unplace(i, c)
            if stop:
                return 1
            cap = self.best - 1
            if w > cap:
                return 0
        return 0

    cdef void enum_rec(self, int i):
        cdef long w
        cdef int k, c, fresh
        if self.tick():
            return
        if i == self.K:
            self.count += 1
            if self.collect:
                self.out.append(self.snapshot())
            return
        w = self.weights[i]
        if w > self.cap_fixed:
            return
        k = self.ncolors
        for c in range(k + 1):
            fresh = c == k
            if fresh and k >= self.K:
                break
            if self.size[c] + w > self.cap_fixed:
                continue
            if not self.fits(i, c, fresh):
                continue
            self.place(i, c)
            if fresh:
                self.ncolors += 1
            if self.slack_ok(i, self.cap_fixed):
                self.enum_rec(i + 1)
            if fresh:
                self.ncolors -= 1
            self.unplace(i, c)


def optimize(budgets, weights, members, upper, lower, deadline=None, node_limit=0):
    cdef _Search s = _Search(budgets, weights, members)
    s.best = upper
    s.lower = lower
    if s.K == 0 or s.best <= lower:
        return s.best, None, True, 0
    if deadline is not None:
        s.has_deadline = 1
        s.deadline = deadline
    s.node_limit = node_limit
    s.opt_rec(0, 0)
    return s.best, s.best_assign, not s.timed_out, s.nodes


def enumerate_colorings(budgets, weights, members, cap, collect=False, node_limit=0):
    cdef _Search s = _Search(budgets, weights, members)
    s.cap_fixed = cap
    s.collect = 1 if collect else 0
    s.node_limit = node_limit
    s.enum_rec(0)
    if s.timed_out:
        raise RuntimeError("enumeration node limit reached")
    return s.count, s.out
