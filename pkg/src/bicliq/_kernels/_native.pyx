# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled mirror of the pure-Python search kernels.

Same canonical branch order as pure.py (first uncovered unit, open slots by
index, new slot last; biclique slots try left/right then right/left), same
pruning, so both backends return byte-identical witnesses.  State lives in
flat C arrays; membership masks are blocked 64-bit words so unit counts are
not capped.
"""

import time as _time

from libc.stdlib cimport calloc, free
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

cdef inline int _ctz(u64 x):
    return __builtin_ctzll(x)


cdef class _RectSearch:
    cdef int nrows, ncols, m, k, nslots, W
    cdef long long deadline, nodes
    cdef unsigned char* data      # nrows*ncols
    cdef int* oi                  # entry -> row
    cdef int* oj                  # entry -> col
    cdef int* cell                # (i,j) -> entry id or -1
    cdef u64* incompat            # m*W
    cdef int* assign
    cdef u64* unassigned          # W
    cdef u64* scratch             # W
    cdef unsigned char* in_rows   # k*nrows
    cdef unsigned char* in_cols   # k*ncols
    cdef u64* members             # k*W
    cdef int* undo_buf            # claims stack, cap m
    cdef int undo_top

    def __cinit__(self, int nrows, int ncols, row_bits, int k, deadline_ns):
        cdef int i, j, e, e1, e2, i1, j1, i2, j2, ok
        self.nrows = nrows
        self.ncols = ncols
        self.k = k
        self.nslots = 0
        self.nodes = 0
        self.deadline = deadline_ns if deadline_ns is not None else 0
        self.data = <unsigned char*> calloc(nrows * ncols, 1)
        self.cell = <int*> calloc(nrows * ncols, sizeof(int))
        for i in range(nrows):
            bits = row_bits[i]
            for j in range(ncols):
                self.data[i * ncols + j] = 1 if (bits >> j) & 1 else 0
        e = 0
        for i in range(nrows):
            for j in range(ncols):
                if self.data[i * ncols + j]:
                    self.cell[i * ncols + j] = e
                    e += 1
                else:
                    self.cell[i * ncols + j] = -1
        self.m = e
        self.W = (e + 63) >> 6 if e else 1
        self.oi = <int*> calloc(max(e, 1), sizeof(int))
        self.oj = <int*> calloc(max(e, 1), sizeof(int))
        e = 0
        for i in range(nrows):
            for j in range(ncols):
                if self.data[i * ncols + j]:
                    self.oi[e] = i
                    self.oj[e] = j
                    e += 1
        self.incompat = <u64*> calloc(max(self.m, 1) * self.W, sizeof(u64))
        for e1 in range(self.m):
            i1 = self.oi[e1]
            j1 = self.oj[e1]
            for e2 in range(e1 + 1, self.m):
                i2 = self.oi[e2]
                j2 = self.oj[e2]
                ok = (
                    i1 == i2
                    or j1 == j2
                    or (self.data[i1 * ncols + j2] and self.data[i2 * ncols + j1])
                )
                if not ok:
                    self.incompat[e1 * self.W + (e2 >> 6)] |= (<u64> 1) << (e2 & 63)
                    self.incompat[e2 * self.W + (e1 >> 6)] |= (<u64> 1) << (e1 & 63)
        self.assign = <int*> calloc(max(self.m, 1), sizeof(int))
        for e in range(self.m):
            self.assign[e] = -1
        self.unassigned = <u64*> calloc(self.W, sizeof(u64))
        self.scratch = <u64*> calloc(self.W, sizeof(u64))
        for e in range(self.m):
            self.unassigned[e >> 6] |= (<u64> 1) << (e & 63)
        self.in_rows = <unsigned char*> calloc(max(k, 1) * nrows, 1)
        self.in_cols = <unsigned char*> calloc(max(k, 1) * ncols, 1)
        self.members = <u64*> calloc(max(k, 1) * self.W, sizeof(u64))
        self.undo_buf = <int*> calloc(max(self.m, 1), sizeof(int))
        self.undo_top = 0

    def __dealloc__(self):
        free(self.data)
        free(self.cell)
        free(self.oi)
        free(self.oj)
        free(self.incompat)
        free(self.assign)
        free(self.unassigned)
        free(self.scratch)
        free(self.in_rows)
        free(self.in_cols)
        free(self.members)
        free(self.undo_buf)

    cdef inline void claim(self, int e, int s):
        self.assign[e] = s
        self.members[s * self.W + (e >> 6)] |= (<u64> 1) << (e & 63)
        self.unassigned[e >> 6] &= ~((<u64> 1) << (e & 63))
        self.undo_buf[self.undo_top] = e
        self.undo_top += 1

    cdef inline void release(self, int e, int s):
        self.assign[e] = -1
        self.members[s * self.W + (e >> 6)] &= ~((<u64> 1) << (e & 63))
        self.unassigned[e >> 6] |= (<u64> 1) << (e & 63)

    cdef int extend(self, int s, int i, int j, int* arow, int* acol):
        cdef int c, r2, e2, a, ok = 1
        cdef int save = self.undo_top
        arow[0] = 0
        acol[0] = 0
        if not self.in_rows[s * self.nrows + i]:
            for c in range(self.ncols):
                if self.in_cols[s * self.ncols + c]:
                    if not self.data[i * self.ncols + c]:
                        ok = 0
                        break
                    e2 = self.cell[i * self.ncols + c]
                    a = self.assign[e2]
                    if a == -1:
                        self.claim(e2, s)
                    elif a != s:
                        ok = 0
                        break
            if ok:
                self.in_rows[s * self.nrows + i] = 1
                arow[0] = 1
        if ok and not self.in_cols[s * self.ncols + j]:
            for r2 in range(self.nrows):
                if self.in_rows[s * self.nrows + r2]:
                    if not self.data[r2 * self.ncols + j]:
                        ok = 0
                        break
                    e2 = self.cell[r2 * self.ncols + j]
                    a = self.assign[e2]
                    if a == -1:
                        self.claim(e2, s)
                    elif a != s:
                        ok = 0
                        break
            if ok:
                self.in_cols[s * self.ncols + j] = 1
                acol[0] = 1
        if not ok:
            if arow[0]:
                self.in_rows[s * self.nrows + i] = 0
                arow[0] = 0
            while self.undo_top > save:
                self.undo_top -= 1
                self.release(self.undo_buf[self.undo_top], s)
            return 0
        return 1

    cdef void retract(self, int s, int save, int arow, int acol, int i, int j):
        if acol:
            self.in_cols[s * self.ncols + j] = 0
        if arow:
            self.in_rows[s * self.nrows + i] = 0
        while self.undo_top > save:
            self.undo_top -= 1
            self.release(self.undo_buf[self.undo_top], s)

    cdef int pruned(self):
        cdef int count = 0, need_new = 0, s, w, w2, e, all_inc
        cdef u64 word
        cdef u64* inc
        for w in range(self.W):
            self.scratch[w] = self.unassigned[w]
        w = 0
        while w < self.W:
            word = self.scratch[w]
            if word == 0:
                w += 1
                continue
            e = (w << 6) + _ctz(word)
            count += 1
            if count > self.k:
                return 1
            inc = self.incompat + e * self.W
            all_inc = 1
            for s in range(self.nslots):
                all_inc = 0
                for w2 in range(self.W):
                    if inc[w2] & self.members[s * self.W + w2]:
                        all_inc = 1
                        break
                if not all_inc:
                    break
            if all_inc:
                need_new += 1
                if self.nslots + need_new > self.k:
                    return 1
            for w2 in range(self.W):
                self.scratch[w2] &= inc[w2]
        return 0

    cdef int dfs(self, int hint):
        # 1 found, 0 exhausted, -2 aborted
        cdef int e, i, j, s, save, r, arow, acol
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & 65535) == 0:
            if _time.monotonic_ns() > self.deadline:
                return -2
        e = hint
        while e < self.m and self.assign[e] != -1:
            e += 1
        if e == self.m:
            return 1
        if self.pruned():
            return 0
        i = self.oi[e]
        j = self.oj[e]
        for s in range(self.nslots):
            save = self.undo_top
            if self.extend(s, i, j, &arow, &acol):
                r = self.dfs(e)
                if r != 0:
                    return r
                self.retract(s, save, arow, acol, i, j)
        if self.nslots < self.k:
            s = self.nslots
            self.in_rows[s * self.nrows + i] = 1
            self.in_cols[s * self.ncols + j] = 1
            memset(self.members + s * self.W, 0, self.W * sizeof(u64))
            self.nslots += 1
            save = self.undo_top
            self.claim(e, s)
            r = self.dfs(e)
            if r != 0:
                return r
            self.undo_top = save
            self.release(e, s)
            self.nslots -= 1
            self.in_rows[s * self.nrows + i] = 0
            self.in_cols[s * self.ncols + j] = 0
        return 0

    def run(self):
        cdef int r, s, i, j
        if self.m == 0:
            return ("found", [])
        if self.k <= 0:
            return ("exhausted", None)
        r = self.dfs(0)
        if r == -2:
            return ("aborted", None)
        if r == 0:
            return ("exhausted", None)
        slots = []
        for s in range(self.nslots):
            rows = tuple(
                i for i in range(self.nrows) if self.in_rows[s * self.nrows + i]
            )
            cols = tuple(
                j for j in range(self.ncols) if self.in_cols[s * self.ncols + j]
            )
            slots.append((rows, cols))
        return ("found", slots)


def rectangle_partition(nrows, ncols, row_bits, k, deadline_ns):
    return _RectSearch(nrows, ncols, row_bits, k, deadline_ns).run()


cdef class _BicliqueSearch:
    cdef int n, m, k, nslots, W
    cdef long long deadline, nodes
    cdef unsigned char* adj       # (n+1)*(n+1)
    cdef int* eu
    cdef int* ev
    cdef int* eid                 # (n+1)*(n+1) -> edge id or -1
    cdef u64* incompat            # m*W
    cdef int* assign
    cdef u64* unassigned
    cdef u64* scratch
    cdef unsigned char* in_left   # k*(n+1)
    cdef unsigned char* in_right  # k*(n+1)
    cdef u64* members             # k*W
    cdef int* undo_buf
    cdef int undo_top

    def __cinit__(self, int n, edges, adj_bits, int k, deadline_ns):
        cdef int nn = n + 1
        cdef int e, e1, e2, u, v, x, y, ok
        self.n = n
        self.m = len(edges)
        self.k = k
        self.nslots = 0
        self.nodes = 0
        self.deadline = deadline_ns if deadline_ns is not None else 0
        self.adj = <unsigned char*> calloc(nn * nn, 1)
        for u in range(1, nn):
            bits = adj_bits[u]
            for v in range(1, nn):
                self.adj[u * nn + v] = 1 if (bits >> v) & 1 else 0
        self.eu = <int*> calloc(max(self.m, 1), sizeof(int))
        self.ev = <int*> calloc(max(self.m, 1), sizeof(int))
        self.eid = <int*> calloc(nn * nn, sizeof(int))
        for e in range(nn * nn):
            self.eid[e] = -1
        for e, (u, v) in enumerate(edges):
            self.eu[e] = u
            self.ev[e] = v
            self.eid[u * nn + v] = e
            self.eid[v * nn + u] = e
        self.W = (self.m + 63) >> 6 if self.m else 1
        self.incompat = <u64*> calloc(max(self.m, 1) * self.W, sizeof(u64))
        for e1 in range(self.m):
            u = self.eu[e1]
            v = self.ev[e1]
            for e2 in range(e1 + 1, self.m):
                x = self.eu[e2]
                y = self.ev[e2]
                if u == x or u == y or v == x or v == y:
                    continue
                ok = (self.adj[u * nn + y] and self.adj[x * nn + v]) or (
                    self.adj[u * nn + x] and self.adj[y * nn + v]
                )
                if not ok:
                    self.incompat[e1 * self.W + (e2 >> 6)] |= (<u64> 1) << (e2 & 63)
                    self.incompat[e2 * self.W + (e1 >> 6)] |= (<u64> 1) << (e1 & 63)
        self.assign = <int*> calloc(max(self.m, 1), sizeof(int))
        for e in range(self.m):
            self.assign[e] = -1
        self.unassigned = <u64*> calloc(self.W, sizeof(u64))
        self.scratch = <u64*> calloc(self.W, sizeof(u64))
        for e in range(self.m):
            self.unassigned[e >> 6] |= (<u64> 1) << (e & 63)
        self.in_left = <unsigned char*> calloc(max(k, 1) * nn, 1)
        self.in_right = <unsigned char*> calloc(max(k, 1) * nn, 1)
        self.members = <u64*> calloc(max(k, 1) * self.W, sizeof(u64))
        self.undo_buf = <int*> calloc(max(self.m, 1), sizeof(int))
        self.undo_top = 0

    def __dealloc__(self):
        free(self.adj)
        free(self.eu)
        free(self.ev)
        free(self.eid)
        free(self.incompat)
        free(self.assign)
        free(self.unassigned)
        free(self.scratch)
        free(self.in_left)
        free(self.in_right)
        free(self.members)
        free(self.undo_buf)

    cdef inline void claim(self, int e, int s):
        self.assign[e] = s
        self.members[s * self.W + (e >> 6)] |= (<u64> 1) << (e & 63)
        self.unassigned[e >> 6] &= ~((<u64> 1) << (e & 63))
        self.undo_buf[self.undo_top] = e
        self.undo_top += 1

    cdef inline void release(self, int e, int s):
        self.assign[e] = -1
        self.members[s * self.W + (e >> 6)] &= ~((<u64> 1) << (e & 63))
        self.unassigned[e >> 6] |= (<u64> 1) << (e & 63)

    cdef int extend(self, int s, int a, int b, int* aleft, int* aright):
        cdef int nn = self.n + 1
        cdef int w, e2, prev, ok = 1
        cdef int save = self.undo_top
        aleft[0] = 0
        aright[0] = 0
        if self.in_right[s * nn + a] or self.in_left[s * nn + b]:
            return 0
        if not self.in_left[s * nn + a]:
            for w in range(1, nn):
                if self.in_right[s * nn + w]:
                    if not self.adj[a * nn + w]:
                        ok = 0
                        break
                    e2 = self.eid[a * nn + w]
                    prev = self.assign[e2]
                    if prev == -1:
                        self.claim(e2, s)
                    elif prev != s:
                        ok = 0
                        break
            if ok:
                self.in_left[s * nn + a] = 1
                aleft[0] = 1
        if ok and not self.in_right[s * nn + b]:
            for w in range(1, nn):
                if self.in_left[s * nn + w]:
                    if not self.adj[b * nn + w]:
                        ok = 0
                        break
                    e2 = self.eid[b * nn + w]
                    prev = self.assign[e2]
                    if prev == -1:
                        self.claim(e2, s)
                    elif prev != s:
                        ok = 0
                        break
            if ok:
                self.in_right[s * nn + b] = 1
                aright[0] = 1
        if not ok:
            if aleft[0]:
                self.in_left[s * nn + a] = 0
                aleft[0] = 0
            while self.undo_top > save:
                self.undo_top -= 1
                self.release(self.undo_buf[self.undo_top], s)
            return 0
        return 1

    cdef void retract(self, int s, int save, int aleft, int aright, int a, int b):
        cdef int nn = self.n + 1
        if aright:
            self.in_right[s * nn + b] = 0
        if aleft:
            self.in_left[s * nn + a] = 0
        while self.undo_top > save:
            self.undo_top -= 1
            self.release(self.undo_buf[self.undo_top], s)

    cdef int pruned(self):
        cdef int count = 0, need_new = 0, s, w, w2, e, all_inc
        cdef u64 word
        cdef u64* inc
        for w in range(self.W):
            self.scratch[w] = self.unassigned[w]
        w = 0
        while w < self.W:
            word = self.scratch[w]
            if word == 0:
                w += 1
                continue
            e = (w << 6) + _ctz(word)
            count += 1
            if count > self.k:
                return 1
            inc = self.incompat + e * self.W
            all_inc = 1
            for s in range(self.nslots):
                all_inc = 0
                for w2 in range(self.W):
                    if inc[w2] & self.members[s * self.W + w2]:
                        all_inc = 1
                        break
                if not all_inc:
                    break
            if all_inc:
                need_new += 1
                if self.nslots + need_new > self.k:
                    return 1
            for w2 in range(self.W):
                self.scratch[w2] &= inc[w2]
        return 0

    cdef int dfs(self, int hint):
        cdef int e, u, v, s, t, a, b, save, r, aleft, aright
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & 65535) == 0:
            if _time.monotonic_ns() > self.deadline:
                return -2
        e = hint
        while e < self.m and self.assign[e] != -1:
            e += 1
        if e == self.m:
            return 1
        if self.pruned():
            return 0
        u = self.eu[e]
        v = self.ev[e]
        for s in range(self.nslots):
            for t in range(2):
                a = u if t == 0 else v
                b = v if t == 0 else u
                save = self.undo_top
                if self.extend(s, a, b, &aleft, &aright):
                    r = self.dfs(e)
                    if r != 0:
                        return r
                    self.retract(s, save, aleft, aright, a, b)
        if self.nslots < self.k:
            s = self.nslots
            self.in_left[s * (self.n + 1) + u] = 1
            self.in_right[s * (self.n + 1) + v] = 1
            memset(self.members + s * self.W, 0, self.W * sizeof(u64))
            self.nslots += 1
            save = self.undo_top
            self.claim(e, s)
            r = self.dfs(e)
            if r != 0:
                return r
            self.undo_top = save
            self.release(e, s)
            self.nslots -= 1
            self.in_left[s * (self.n + 1) + u] = 0
            self.in_right[s * (self.n + 1) + v] = 0
        return 0

    def run(self):
        cdef int r, s, v
        cdef int nn = self.n + 1
        if self.m == 0:
            return ("found", [])
        if self.k <= 0:
            return ("exhausted", None)
        r = self.dfs(0)
        if r == -2:
            return ("aborted", None)
        if r == 0:
            return ("exhausted", None)
        slots = []
        for s in range(self.nslots):
            left = tuple(v for v in range(1, nn) if self.in_left[s * nn + v])
            right = tuple(v for v in range(1, nn) if self.in_right[s * nn + v])
            slots.append((left, right))
        return ("found", slots)


def biclique_partition(n, edges, adj_bits, k, deadline_ns):
    return _BicliqueSearch(n, edges, adj_bits, k, deadline_ns).run()
