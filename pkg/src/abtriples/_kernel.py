"""Jitted backtracking kernel.

Optional fast path for the solver; mirrors the pure-Python engine in
solver.py step for step so both produce identical traversals and
witnesses.  Branching assigns the smallest undetermined integer, colors
in ascending order under canonical labeling.  Unit propagation runs to
a fixed point: each determined integer registers the triples it
completes a same-colored pair in, forbidding the third element's color;
an integer with one color left is determined immediately and cascades.
Per-color forbidden sets are uint64 bitset rows (bit q = integer q is
barred from that color).
"""

from __future__ import annotations

import time

import numpy as np
from numba import njit, objmode

SAT = 1
UNSAT = 0
ABORT = 2

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_TIME_CHECK_STRIDE = 1 << 18


@njit(cache=True)
def _dfs(
    n,
    r,
    mstart,
    mx,
    mz,
    sstart,
    sy,
    sz,
    max_nodes,
    deadline,
    det,
    forb,
    snap_forb,
    snap_used,
    trail,
    tstart,
    queue,
    bpos,
    btried,
):
    W = forb.shape[1]
    nodes = np.int64(0)
    next_check = np.int64(_TIME_CHECK_STRIDE)
    tptr = 0
    L = 1
    bpos[1] = 1
    btried[1] = -1
    tstart[1] = 0
    snap_used[1] = 0
    for c in range(r):
        for w in range(W):
            snap_forb[1, c, w] = forb[c, w]
    while True:
        p = bpos[L]
        um = snap_used[L]
        cnt = 0
        for c2 in range(r):
            if (um >> c2) & 1:
                cnt += 1
        limit = cnt if cnt < r - 1 else r - 1
        sel = -1
        c = btried[L] + 1
        while c <= limit:
            if (forb[c, p >> 6] >> np.uint64(p & 63)) & _ONE == _ZERO:
                sel = c
                break
            c += 1
        if sel < 0:
            L -= 1
            if L == 0:
                return UNSAT, nodes
            while tptr > tstart[L]:
                tptr -= 1
                det[trail[tptr]] = -1
            for c2 in range(r):
                for w in range(W):
                    forb[c2, w] = snap_forb[L, c2, w]
            continue
        btried[L] = sel
        nodes += 1
        if nodes >= max_nodes:
            return ABORT, nodes
        if deadline > 0.0 and nodes >= next_check:
            next_check = nodes + _TIME_CHECK_STRIDE
            with objmode(now="float64"):
                now = time.monotonic()
            if now >= deadline:
                return ABORT, nodes

        # assign and propagate to a fixed point
        conflict = False
        qhead = 0
        qtail = 0
        det[p] = sel
        trail[tptr] = p
        tptr += 1
        used_mask = snap_used[L] | (np.int64(1) << sel)
        queue[qtail] = p
        qtail += 1
        while qhead < qtail and not conflict:
            v = queue[qhead]
            qhead += 1
            cv = det[v]
            for idx in range(2):
                if idx == 0:
                    k0, k1 = mstart[v], mstart[v + 1]
                else:
                    k0, k1 = sstart[v], sstart[v + 1]
                for k in range(k0, k1):
                    if idx == 0:
                        other, z = mx[k], mz[k]
                    else:
                        other, z = sy[k], sz[k]
                    if det[other] != cv:
                        continue
                    dz = det[z]
                    if dz == cv:
                        conflict = True
                        break
                    if dz != -1:
                        continue
                    wz = z >> 6
                    bz = np.uint64(z & 63)
                    if (forb[cv, wz] >> bz) & _ONE != _ZERO:
                        continue
                    forb[cv, wz] |= _ONE << bz
                    navail = 0
                    avail = -1
                    for c2 in range(r):
                        if (forb[c2, wz] >> bz) & _ONE == _ZERO:
                            navail += 1
                            avail = c2
                    if navail == 0:
                        conflict = True
                        break
                    if navail == 1:
                        det[z] = avail
                        trail[tptr] = z
                        tptr += 1
                        used_mask |= np.int64(1) << avail
                        queue[qtail] = z
                        qtail += 1
                if conflict:
                    break
        if conflict:
            while tptr > tstart[L]:
                tptr -= 1
                det[trail[tptr]] = -1
            for c2 in range(r):
                for w in range(W):
                    forb[c2, w] = snap_forb[L, c2, w]
            continue

        q = p + 1
        while q <= n and det[q] != -1:
            q += 1
        if q > n:
            return SAT, nodes
        L += 1
        bpos[L] = q
        btried[L] = -1
        tstart[L] = tptr
        snap_used[L] = used_mask
        for c2 in range(r):
            for w in range(W):
                snap_forb[L, c2, w] = forb[c2, w]


def run(n, r, mid_lists, min_lists, max_nodes, deadline):
    """Search for a valid coloring of [1, n] with r colors.

    mid_lists[p] holds (x, z) pairs of triples (x, p, z); min_lists[p]
    holds (y, z) pairs of triples (p, y, z), both limited to z <= n.
    Returns (status, colors 1-indexed list or None, nodes).
    """

    def csr(lists):
        m = sum(len(ps) for ps in lists[1:])
        start = np.zeros(n + 2, dtype=np.int32)
        first = np.zeros(max(m, 1), dtype=np.int32)
        second = np.zeros(max(m, 1), dtype=np.int32)
        k = 0
        for p in range(1, n + 1):
            start[p] = k
            for u, z in lists[p]:
                first[k] = u
                second[k] = z
                k += 1
        start[n + 1] = k
        return start, first, second

    mstart, mx, mz = csr(mid_lists)
    sstart, sy, sz = csr(min_lists)

    W = (n + 64) // 64
    det = np.full(n + 1, -1, dtype=np.int8)
    forb = np.zeros((r, W), dtype=np.uint64)
    snap_forb = np.zeros((n + 2, r, W), dtype=np.uint64)
    snap_used = np.zeros(n + 2, dtype=np.int64)
    trail = np.zeros(n + 1, dtype=np.int32)
    tstart = np.zeros(n + 2, dtype=np.int32)
    queue = np.zeros(n + 1, dtype=np.int32)
    bpos = np.zeros(n + 2, dtype=np.int32)
    btried = np.full(n + 2, -1, dtype=np.int8)

    cap = np.int64(max_nodes) if max_nodes is not None else np.int64(2**62)
    dl = float(deadline) if deadline is not None else 0.0
    status, nodes = _dfs(
        n, r, mstart, mx, mz, sstart, sy, sz, cap, dl,
        det, forb, snap_forb, snap_used, trail, tstart, queue, bpos, btried,
    )
    if status == SAT:
        return status, [int(det[p]) for p in range(1, n + 1)], int(nodes)
    return status, None, int(nodes)
