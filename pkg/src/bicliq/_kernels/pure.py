"""Reference backtracking kernels for the two exact partition searches.

Both searches answer "can the target structure be partitioned into at most k
all-ones blocks" and share one skeleton: pick the first uncovered unit
(row-major entry, or lexicographically first edge), try every open slot, then
open a new slot if fewer than k exist.  Adding a unit to a slot triggers
rectangle/biclique closure: every entry implied by the enlarged block is
checked and claimed for the same slot, failing fast on zeros or foreign
claims.  Slots open in first-uncovered order and a new biclique slot puts the
smaller endpoint on the left, which kills slot-relabeling and side-swap
symmetry.

Pruning: a greedy set of pairwise-incompatible uncovered units (units that
provably cannot share any slot) must fit in k slots, and those incompatible
with every open slot each need a fresh one.

The native Cython kernel mirrors this module branch for branch; both must
produce identical witnesses.  Deadlines are time.monotonic_ns() values.
"""

from __future__ import annotations

import time

_BUDGET_STRIDE = 2048


class _Abort(Exception):
    pass


def _first_zero(assign: list[int], hint: int) -> int:
    m = len(assign)
    while hint < m and assign[hint] != -1:
        hint += 1
    return hint


def rectangle_partition(nrows, ncols, row_bits, k, deadline_ns):
    """Search for a partition of the 1-entries into at most k rectangles.

    Returns ("found", slots) with slots a list of (rows, cols) 0-indexed
    sorted tuples, ("exhausted", None) when provably impossible, or
    ("aborted", None) past the deadline.
    """
    ones = [
        (i, j) for i in range(nrows) for j in range(ncols) if row_bits[i] >> j & 1
    ]
    m = len(ones)
    if m == 0:
        return ("found", [])
    if k <= 0:
        return ("exhausted", None)
    eid = {pos: e for e, pos in enumerate(ones)}

    incompat = [0] * m
    for e1 in range(m):
        i1, j1 = ones[e1]
        for e2 in range(e1 + 1, m):
            i2, j2 = ones[e2]
            ok = (
                i1 == i2
                or j1 == j2
                or (row_bits[i1] >> j2 & 1 and row_bits[i2] >> j1 & 1)
            )
            if not ok:
                incompat[e1] |= 1 << e2
                incompat[e2] |= 1 << e1

    assign = [-1] * m
    unassigned = (1 << m) - 1
    rows_of: list[set[int]] = []
    cols_of: list[set[int]] = []
    members: list[int] = []
    nodes = 0

    def claim(e, s, undo):
        nonlocal unassigned
        assign[e] = s
        members[s] |= 1 << e
        unassigned &= ~(1 << e)
        undo.append(e)

    def release(e, s):
        nonlocal unassigned
        assign[e] = -1
        members[s] &= ~(1 << e)
        unassigned |= 1 << e

    def extend(s, i, j):
        """Add entry (i,j) to slot s with closure; undo token or None."""
        undo: list[int] = []
        added_row = added_col = False
        ok = True
        if i not in rows_of[s]:
            for c in cols_of[s]:
                if not row_bits[i] >> c & 1:
                    ok = False
                    break
                e2 = eid[(i, c)]
                a = assign[e2]
                if a == -1:
                    claim(e2, s, undo)
                elif a != s:
                    ok = False
                    break
            if ok:
                rows_of[s].add(i)
                added_row = True
        if ok and j not in cols_of[s]:
            for r in rows_of[s]:
                if not row_bits[r] >> j & 1:
                    ok = False
                    break
                e2 = eid[(r, j)]
                a = assign[e2]
                if a == -1:
                    claim(e2, s, undo)
                elif a != s:
                    ok = False
                    break
            if ok:
                cols_of[s].add(j)
                added_col = True
        if not ok:
            if added_row:
                rows_of[s].discard(i)
            for e2 in undo:
                release(e2, s)
            return None
        return (undo, added_row, added_col, i, j)

    def retract(s, token):
        undo, added_row, added_col, i, j = token
        if added_col:
            cols_of[s].discard(j)
        if added_row:
            rows_of[s].discard(i)
        for e2 in undo:
            release(e2, s)

    def pruned():
        mask = unassigned
        count = need_new = 0
        open_slots = len(members)
        while mask:
            low = mask & -mask
            e = low.bit_length() - 1
            count += 1
            if count > k:
                return True
            allm = True
            for s in range(open_slots):
                if not incompat[e] & members[s]:
                    allm = False
                    break
            if allm:
                need_new += 1
                if open_slots + need_new > k:
                    return True
            mask &= incompat[e]
        return False

    def dfs(hint):
        nonlocal nodes
        nodes += 1
        if deadline_ns is not None and nodes % _BUDGET_STRIDE == 0:
            if time.monotonic_ns() > deadline_ns:
                raise _Abort
        e = _first_zero(assign, hint)
        if e == m:
            return True
        if pruned():
            return False
        i, j = ones[e]
        for s in range(len(members)):
            token = extend(s, i, j)
            if token is not None:
                if dfs(e):
                    return True
                retract(s, token)
        if len(members) < k:
            rows_of.append({i})
            cols_of.append({j})
            members.append(0)
            undo: list[int] = []
            claim(e, len(members) - 1, undo)
            if dfs(e):
                return True
            release(e, len(members) - 1)
            rows_of.pop()
            cols_of.pop()
            members.pop()
        return False

    try:
        found = dfs(0)
    except _Abort:
        return ("aborted", None)
    if not found:
        return ("exhausted", None)
    slots = [
        (tuple(sorted(rows_of[s])), tuple(sorted(cols_of[s])))
        for s in range(len(members))
    ]
    return ("found", slots)


def biclique_partition(n, edges, adj_bits, k, deadline_ns):
    """Search for a partition of the edges into at most k bicliques.

    edges must be sorted (u, v) pairs with u < v; adj_bits[v] has bit w set
    iff vw is an edge.  Returns ("found", slots) with slots a list of
    (left, right) sorted vertex tuples, ("exhausted", None), or
    ("aborted", None).
    """
    m = len(edges)
    if m == 0:
        return ("found", [])
    if k <= 0:
        return ("exhausted", None)
    eid = {e: idx for idx, e in enumerate(edges)}

    incompat = [0] * m
    for e1 in range(m):
        u, v = edges[e1]
        for e2 in range(e1 + 1, m):
            x, y = edges[e2]
            if u in (x, y) or v in (x, y):
                continue
            ok = (adj_bits[u] >> y & 1 and adj_bits[x] >> v & 1) or (
                adj_bits[u] >> x & 1 and adj_bits[y] >> v & 1
            )
            if not ok:
                incompat[e1] |= 1 << e2
                incompat[e2] |= 1 << e1

    assign = [-1] * m
    unassigned = (1 << m) - 1
    left_of: list[set[int]] = []
    right_of: list[set[int]] = []
    members: list[int] = []
    nodes = 0

    def claim(e, s, undo):
        nonlocal unassigned
        assign[e] = s
        members[s] |= 1 << e
        unassigned &= ~(1 << e)
        undo.append(e)

    def release(e, s):
        nonlocal unassigned
        assign[e] = -1
        members[s] &= ~(1 << e)
        unassigned |= 1 << e

    def extend(s, a, b):
        """Put vertex a on the left, b on the right of slot s, with closure."""
        if a in right_of[s] or b in left_of[s]:
            return None
        undo: list[int] = []
        added_left = added_right = False
        ok = True
        if a not in left_of[s]:
            for w in right_of[s]:
                if not adj_bits[a] >> w & 1:
                    ok = False
                    break
                e2 = eid[(a, w) if a < w else (w, a)]
                prev = assign[e2]
                if prev == -1:
                    claim(e2, s, undo)
                elif prev != s:
                    ok = False
                    break
            if ok:
                left_of[s].add(a)
                added_left = True
        if ok and b not in right_of[s]:
            for w in left_of[s]:
                if not adj_bits[b] >> w & 1:
                    ok = False
                    break
                e2 = eid[(b, w) if b < w else (w, b)]
                prev = assign[e2]
                if prev == -1:
                    claim(e2, s, undo)
                elif prev != s:
                    ok = False
                    break
            if ok:
                right_of[s].add(b)
                added_right = True
        if not ok:
            if added_left:
                left_of[s].discard(a)
            for e2 in undo:
                release(e2, s)
            return None
        return (undo, added_left, added_right, a, b)

    def retract(s, token):
        undo, added_left, added_right, a, b = token
        if added_right:
            right_of[s].discard(b)
        if added_left:
            left_of[s].discard(a)
        for e2 in undo:
            release(e2, s)

    def pruned():
        mask = unassigned
        count = need_new = 0
        open_slots = len(members)
        while mask:
            low = mask & -mask
            e = low.bit_length() - 1
            count += 1
            if count > k:
                return True
            allm = True
            for s in range(open_slots):
                if not incompat[e] & members[s]:
                    allm = False
                    break
            if allm:
                need_new += 1
                if open_slots + need_new > k:
                    return True
            mask &= incompat[e]
        return False

    def dfs(hint):
        nonlocal nodes
        nodes += 1
        if deadline_ns is not None and nodes % _BUDGET_STRIDE == 0:
            if time.monotonic_ns() > deadline_ns:
                raise _Abort
        e = _first_zero(assign, hint)
        if e == m:
            return True
        if pruned():
            return False
        u, v = edges[e]
        for s in range(len(members)):
            for a, b in ((u, v), (v, u)):
                token = extend(s, a, b)
                if token is not None:
                    if dfs(e):
                        return True
                    retract(s, token)
        if len(members) < k:
            left_of.append({u})
            right_of.append({v})
            members.append(0)
            undo: list[int] = []
            claim(e, len(members) - 1, undo)
            if dfs(e):
                return True
            release(e, len(members) - 1)
            left_of.pop()
            right_of.pop()
            members.pop()
        return False

    try:
        found = dfs(0)
    except _Abort:
        return ("aborted", None)
    if not found:
        return ("exhausted", None)
    slots = [
        (tuple(sorted(left_of[s])), tuple(sorted(right_of[s])))
        for s in range(len(members))
    ]
    return ("found", slots)
