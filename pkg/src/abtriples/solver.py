"""Existence decisions and exact thresholds by backtracking search.

The search assigns the integers 1, 2, ..., n in ascending order,
branching on colors in ascending order under a canonical-labeling rule
(color c+1 may first appear only after color c has).  After each
assignment, unit propagation runs to a fixed point: once two elements
of a triple share a color, that color is forbidden for the third, an
integer with a single color left is determined immediately, and a
branch dies as soon as some integer has every color forbidden.  The
traversal is fully deterministic, so outcomes, witnesses, and node
counts are reproducible run to run.

compute_T scans n upward, reusing the previous witness as a warm start,
and stops at the first n where the search proves unsatisfiability.
brute_force_exists is an independent exhaustive oracle for small
instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .core import Coloring, Params, mid_pairs, triples_with_max
from . import bounds

try:
    from . import _kernel

    _HAVE_KERNEL = True
except ImportError:  # pragma: no cover - numba genuinely absent
    _kernel = None
    _HAVE_KERNEL = False

_SAT, _UNSAT, _ABORT = 1, 0, 2

BRUTE_FORCE_LIMIT = 2**25


@dataclass(frozen=True)
class Budget:
    """Search limits; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 0:
            raise ValueError("max_nodes must be nonnegative")
        if self.max_seconds is not None and self.max_seconds < 0:
            raise ValueError("max_seconds must be nonnegative")

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls()

    @classmethod
    def from_ms(cls, ms: int | None) -> "Budget":
        return cls(max_seconds=ms / 1000.0 if ms is not None else None)


@dataclass
class SearchStats:
    nodes: int = 0
    ms: int = 0

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "ms": self.ms}


@dataclass(frozen=True)
class ExistsResult:
    status: str  # "yes" | "no" | "unknown"
    witness: Coloring | None
    stats: SearchStats


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "exact" | "atleast" | "infinite" | "unknown"
    value: int | None
    witness: Coloring | None
    stats: SearchStats


def _build_pairs(params: Params, n: int):
    """Constraint indexes: triples keyed by middle and by smallest element.

    mid[p] = (x, z) pairs of triples (x, p, z); mins[p] = (y, z) pairs
    of triples (p, y, z); both limited to z <= n.
    """
    mid = [[]] + [mid_pairs(params, p, n) for p in range(1, n + 1)]
    a, b = params.a, params.b
    mins: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for x in range(1, n + 1):
        lst = mins[x]
        for d in range(1, (n - b * x) // 2 + 1):
            lst.append((a * x + d, b * x + 2 * d))
    return mid, mins


def _dfs_python(n, r, mid, mins, max_nodes, deadline):
    """Reference engine; same traversal as the jitted kernel."""
    det = [-1] * (n + 1)
    forb = [0] * r
    bpos = [0] * (n + 2)
    btried = [-1] * (n + 2)
    tstart = [0] * (n + 2)
    snap_used = [0] * (n + 2)
    snap_forb: list = [None] * (n + 2)
    trail = [0] * (n + 1)
    queue = [0] * (n + 1)
    nodes = 0
    next_check = 1 << 14
    cap = max_nodes if max_nodes is not None else float("inf")
    tptr = 0
    L = 1
    bpos[1] = 1
    snap_forb[1] = list(forb)
    while True:
        p = bpos[L]
        um = snap_used[L]
        limit = min(bin(um).count("1"), r - 1)
        sel = -1
        c = btried[L] + 1
        while c <= limit:
            if not (forb[c] >> p) & 1:
                sel = c
                break
            c += 1
        if sel < 0:
            L -= 1
            if L == 0:
                return _UNSAT, None, nodes
            while tptr > tstart[L]:
                tptr -= 1
                det[trail[tptr]] = -1
            forb[:] = snap_forb[L]
            continue
        btried[L] = sel
        nodes += 1
        if nodes >= cap:
            return _ABORT, None, nodes
        if deadline is not None and nodes >= next_check:
            next_check = nodes + (1 << 14)
            if time.monotonic() >= deadline:
                return _ABORT, None, nodes

        # assign and propagate to a fixed point
        conflict = False
        qhead = qtail = 0
        det[p] = sel
        trail[tptr] = p
        tptr += 1
        used_mask = snap_used[L] | (1 << sel)
        queue[qtail] = p
        qtail += 1
        while qhead < qtail and not conflict:
            v = queue[qhead]
            qhead += 1
            cv = det[v]
            for pairs in (mid[v], mins[v]):
                for other, z in pairs:
                    if det[other] != cv:
                        continue
                    dz = det[z]
                    if dz == cv:
                        conflict = True
                        break
                    if dz != -1:
                        continue
                    if (forb[cv] >> z) & 1:
                        continue
                    forb[cv] |= 1 << z
                    navail = 0
                    avail = -1
                    for c2 in range(r):
                        if not (forb[c2] >> z) & 1:
                            navail += 1
                            avail = c2
                    if navail == 0:
                        conflict = True
                        break
                    if navail == 1:
                        det[z] = avail
                        trail[tptr] = z
                        tptr += 1
                        used_mask |= 1 << avail
                        queue[qtail] = z
                        qtail += 1
                if conflict:
                    break
        if conflict:
            while tptr > tstart[L]:
                tptr -= 1
                det[trail[tptr]] = -1
            forb[:] = snap_forb[L]
            continue

        q = p + 1
        while q <= n and det[q] != -1:
            q += 1
        if q > n:
            return _SAT, det[1:], nodes
        L += 1
        bpos[L] = q
        btried[L] = -1
        tstart[L] = tptr
        snap_used[L] = used_mask
        snap_forb[L] = list(forb)


def _run_search(params: Params, n: int, budget: Budget | None, engine: str):
    budget = budget or Budget.unlimited()
    deadline = (
        time.monotonic() + budget.max_seconds if budget.max_seconds is not None else None
    )
    return _run_search_dl(params, n, budget.max_nodes, deadline, engine)


def _run_search_dl(params: Params, n: int, max_nodes, deadline, engine: str):
    mid, mins = _build_pairs(params, n)
    if engine == "auto":
        engine = "jit" if _HAVE_KERNEL else "python"
    if engine == "jit":
        if not _HAVE_KERNEL:
            raise RuntimeError("jit engine requested but numba is unavailable")
        return _kernel.run(n, params.r, mid, mins, max_nodes, deadline)
    if engine != "python":
        raise ValueError(f"unknown engine {engine!r}")
    return _dfs_python(n, params.r, mid, mins, max_nodes, deadline)


def exists_valid(
    params: Params, n: int, budget: Budget | None = None, engine: str = "auto"
) -> ExistsResult:
    """Decide whether a valid r-coloring of [1, n] exists.

    "yes" comes with a witness coloring, "no" is an exhaustive-search
    proof, and "unknown" occurs only when the budget runs out.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    t0 = time.monotonic()
    status, colors, nodes = _run_search(params, n, budget, engine)
    stats = SearchStats(nodes=nodes, ms=int((time.monotonic() - t0) * 1000))
    if status == _SAT:
        return ExistsResult("yes", Coloring(params, n, tuple(colors)), stats)
    if status == _UNSAT:
        return ExistsResult("no", None, stats)
    return ExistsResult("unknown", None, stats)


def _extend_witness(params: Params, colors: list[int], n: int) -> int | None:
    """Smallest color extending a valid coloring of [1, n-1] to n, or None.

    colors is 0-indexed over [1, n-1] and assumed canonical; candidate
    colors keep it canonical.
    """
    r = params.r
    forbidden = 0
    for t in triples_with_max(params, n):
        cx = colors[t.x - 1]
        if cx == colors[t.y - 1]:
            forbidden |= 1 << cx
    limit = min(max(colors, default=-1) + 1, r - 1)
    for c in range(limit + 1):
        if not (forbidden >> c) & 1:
            return c
    return None


def compute_T(
    params: Params,
    cap: int | None = None,
    budget: Budget | None = None,
    engine: str = "auto",
) -> SolveOutcome:
    """Least t such that every r-coloring of [1, t] has a monochromatic triple.

    Returns Infinite analytically when b = 2a and r >= 2 (no threshold
    exists), and short-circuits r = 1 to b + 2, the largest element of
    the first triple (1, a+1, b+2).  Otherwise scans n upward until the
    first unsatisfiable n.  Without an explicit cap the scan is capped
    by the best formula upper bound (2 colors only); passing that cap
    while still satisfiable would contradict the bound and raises.
    With an explicit cap, reaching it satisfiable returns AtLeast(cap+1).
    """
    a, b, r = params.a, params.b, params.r
    if cap is not None and cap < 1:
        raise ValueError(f"need cap >= 1, got cap={cap}")
    t0 = time.monotonic()
    stats = SearchStats()

    if b == 2 * a and r >= 2:
        stats.ms = int((time.monotonic() - t0) * 1000)
        return SolveOutcome("infinite", None, None, stats)

    if r == 1:
        t = b + 2
        if cap is not None and cap < t:
            witness = Coloring(params, cap, (0,) * cap)
            stats.ms = int((time.monotonic() - t0) * 1000)
            return SolveOutcome("atleast", cap + 1, witness, stats)
        witness = Coloring(params, t - 1, (0,) * (t - 1))
        stats.ms = int((time.monotonic() - t0) * 1000)
        return SolveOutcome("exact", t, witness, stats)

    theory_cap = None
    if cap is None:
        if r == 2:
            theory_cap = bounds.best_known_upper(a, b)
        if theory_cap is None:
            raise ValueError("an explicit cap is required when no formula upper bound applies")

    budget = budget or Budget.unlimited()
    deadline = (
        time.monotonic() + budget.max_seconds if budget.max_seconds is not None else None
    )
    nodes_left = budget.max_nodes
    effective_cap = cap if cap is not None else theory_cap

    witness_colors: list[int] = []
    for n in range(1, effective_cap + 1):
        if n > 1:
            ext = _extend_witness(params, witness_colors, n)
            if ext is not None:
                witness_colors.append(ext)
                continue
        if deadline is not None and time.monotonic() >= deadline:
            return _timeout_outcome(params, witness_colors, stats, t0)
        status, colors, nodes = _run_search_dl(params, n, nodes_left, deadline, engine)
        stats.nodes += nodes
        if nodes_left is not None:
            nodes_left = max(nodes_left - nodes, 0)
        if status == _SAT:
            witness_colors = colors
            continue
        stats.ms = int((time.monotonic() - t0) * 1000)
        if status == _UNSAT:
            witness = (
                Coloring(params, n - 1, tuple(witness_colors)) if n > 1 else None
            )
            return SolveOutcome("exact", n, witness, stats)
        return _timeout_outcome(params, witness_colors, stats, t0)

    stats.ms = int((time.monotonic() - t0) * 1000)
    if cap is None:
        raise RuntimeError(
            f"satisfiable at n={effective_cap}, beyond the proven upper bound "
            f"for (a={a}, b={b}); this indicates a solver bug"
        )
    witness = Coloring(params, effective_cap, tuple(witness_colors))
    return SolveOutcome("atleast", effective_cap + 1, witness, stats)


def _timeout_outcome(params, witness_colors, stats, t0) -> SolveOutcome:
    stats.ms = int((time.monotonic() - t0) * 1000)
    witness = (
        Coloring(params, len(witness_colors), tuple(witness_colors))
        if witness_colors
        else None
    )
    return SolveOutcome("unknown", None, witness, stats)


def brute_force_exists(params: Params, n: int) -> bool:
    """Exhaustive existence oracle; guarded to r**n <= 2**25.

    Enumerates colorings directly (with the first integer pinned to
    color 0, justified by label-permutation invariance) and tests each
    against the full triple list.  Completely independent of the
    backtracking engine: no ordering, propagation, or pruning.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if params.r**n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"r**n = {params.r**n} exceeds the {BRUTE_FORCE_LIMIT} guard")
    r = params.r
    triples = [
        (t.x - 1, t.y - 1, t.z - 1)
        for z in range(1, n + 1)
        for t in triples_with_max(params, z)
    ]
    if not triples:
        return True
    if r == 1:
        return False
    if r == 2:
        import numpy as np

        # colorings as bitmasks, bit i-1 = color of integer i; even
        # masks are exactly the colorings with color(1) = 0
        masks = np.arange(1 << (n - 1), dtype=np.uint32) << 1
        alive = np.ones(masks.shape, dtype=bool)
        for x, y, z in triples:
            t = np.uint32((1 << x) | (1 << y) | (1 << z))
            q = masks & t
            alive &= (q != 0) & (q != t)
            if not alive.any():
                return False
        return True
    import itertools

    for rest in itertools.product(range(r), repeat=n - 1):
        cs = (0,) + rest
        for x, y, z in triples:
            if cs[x] == cs[y] == cs[z]:
                break
        else:
            return True
    return False


def iter_valid_colorings(
    params: Params, n: int, limit: int | None = None
) -> Iterator[Coloring]:
    """Yield canonical valid colorings of [1, n] in search order.

    Canonical means integer 1 has color 0 and each new color first
    appears only after all smaller ones.  Deterministic; stops after
    `limit` colorings when given.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    pairs, _ = _build_pairs(params, n)
    r = params.r
    colors = [-1] * (n + 1)
    chosen = [-1] * (n + 2)
    used = [0] * (n + 2)
    saved = [0] * (n + 1)
    forb = [0] * r
    count = 0
    p = 1
    while True:
        c = chosen[p] + 1
        lim = min(used[p], r - 1)
        sel = -1
        while c <= lim:
            if not (forb[c] >> p) & 1:
                sel = c
                break
            c += 1
        if sel < 0:
            chosen[p] = -1
            p -= 1
            if p == 0:
                return
            forb[chosen[p]] = saved[p]
            continue
        chosen[p] = sel
        old = forb[sel]
        add = 0
        for x, z in pairs[p]:
            if colors[x] == sel:
                add |= 1 << z
        if add:
            new = old | add
            dead = new
            for c2 in range(r):
                if c2 != sel:
                    dead &= forb[c2]
            if dead >> (p + 1):
                continue
            forb[sel] = new
        saved[p] = old
        colors[p] = sel
        if p == n:
            yield Coloring(params, n, tuple(colors[1:]))
            count += 1
            if limit is not None and count >= limit:
                return
            forb[sel] = old  # undo and continue from the same depth
            continue
        used[p + 1] = used[p] + (1 if sel == used[p] else 0)
        p += 1
        chosen[p] = -1


def dor_probe(
    a: int,
    b: int,
    max_r: int,
    cap: int | None = None,
    budget: Budget | None = None,
    engine: str = "auto",
) -> list[tuple[int, SolveOutcome]]:
    """compute_T outcomes for r = 1..max_r.

    The largest r with an exact outcome certifies a lower bound on the
    degree of regularity of (a, b); atleast/unknown outcomes certify
    nothing about nonexistence.
    """
    if max_r < 1:
        raise ValueError(f"need max_r >= 1, got {max_r}")
    out = []
    for r in range(1, max_r + 1):
        params = Params(a, b, r)
        if cap is None and r > 2 and b != 2 * a:
            raise ValueError("an explicit cap is required to probe r >= 3")
        out.append((r, compute_T(params, cap=cap, budget=budget, engine=engine)))
    return out
