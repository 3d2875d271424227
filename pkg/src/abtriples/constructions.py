"""Explicit interval colorings that certify lower bounds for a = b.

Three families: a 2-coloring of [1, a^2+3a+7], a 3-coloring of
[1, 3a^3+4a^2+5a+7], and a 4-coloring of [1, 7a^4+12a^3+6a^2+9a+15].
Each certified coloring of [1, L] proves the threshold exceeds L.
Every result is machine-checked with the core validity scanner; a
construction is never reported certified on faith.

The band layout is geometric: each color occupies one interval whose
endpoint is roughly a times the previous band's, so any triple starting
inside a band leaves it, and the top region is split so that triples
reaching it from below land in a differently-colored slice.  The
4-coloring extends the 3-coloring by one more geometric band plus a
three-way top split; its endpoints are this implementation's proposal
and stand or fall with the certification check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coloring, Params, Triple, find_mono_triple
from . import solver


@dataclass(frozen=True)
class ConstructionResult:
    label: str  # "Thm3.1" | "Thm3.2" | "Thm3.3"
    a: int
    claimed_n: int
    coloring: Coloring
    certified: bool
    offending: Triple | None = None
    source: str = "pattern"  # "pattern" | "search"


def _paint(n: int, r: int, bands: list[tuple[int, int, int]], params: Params) -> Coloring:
    # bands: (lo, hi, color), inclusive; must exactly cover [1, n]
    colors = [-1] * n
    for lo, hi, c in bands:
        for i in range(lo, hi + 1):
            colors[i - 1] = c
    if any(c < 0 for c in colors):
        missing = [i + 1 for i, c in enumerate(colors) if c < 0]
        raise AssertionError(f"bands leave {missing[:5]}... uncolored")
    return Coloring(params, n, tuple(colors))


def _certify(label: str, a: int, coloring: Coloring) -> ConstructionResult:
    bad = find_mono_triple(coloring)
    return ConstructionResult(label, a, coloring.n, coloring, bad is None, bad)


def two_coloring_length(a: int) -> int:
    return a * a + 3 * a + 7


def three_coloring_length(a: int) -> int:
    return 3 * a**3 + 4 * a**2 + 5 * a + 7


def four_coloring_length(a: int) -> int:
    return 7 * a**4 + 12 * a**3 + 6 * a**2 + 9 * a + 15


def construct_2col(a: int) -> ConstructionResult:
    """2-coloring of [1, a^2+3a+7], a >= 4.

    Color 0 covers [1, a+1], [a^2+2a+2, a^2+3a+3], and the singletons
    a^2+3a+5 and a^2+3a+7; color 1 covers [a+2, a^2+2a+1] and the
    singletons a^2+3a+4 and a^2+3a+6.  The block [a+2, a^2+1] belongs
    to color 1 as the unique choice surviving certification at small a.
    """
    if a < 4:
        raise ValueError(f"need a >= 4, got a={a}")
    n = two_coloring_length(a)
    s = a * a
    bands = [
        (1, a + 1, 0),
        (a + 2, s + 1, 1),
        (s + 2, s + 2 * a + 1, 1),
        (s + 2 * a + 2, s + 3 * a + 3, 0),
        (s + 3 * a + 4, s + 3 * a + 4, 1),
        (s + 3 * a + 5, s + 3 * a + 5, 0),
        (s + 3 * a + 6, s + 3 * a + 6, 1),
        (s + 3 * a + 7, s + 3 * a + 7, 0),
    ]
    coloring = _paint(n, 2, bands, Params(a, a, 2))
    return _certify("Thm3.1", a, coloring)


def construct_3col(a: int) -> ConstructionResult:
    """3-coloring of [1, 3a^3+4a^2+5a+7], a >= 2.

    Color 0: [1, a+1] and [a^3+2a^2+2a+2, 2a^3+3a^2+3a+3].
    Color 1: [a+2, a^2+2a+1] and [2a^3+3a^2+3a+4, 3a^3+4a^2+5a+7].
    Color 2: [a^2+2a+2, a^3+2a^2+2a+1].
    """
    if a < 2:
        raise ValueError(f"need a >= 2, got a={a}")
    n = three_coloring_length(a)
    a2, a3 = a * a, a**3
    bands = [
        (1, a + 1, 0),
        (a + 2, a2 + 2 * a + 1, 1),
        (a2 + 2 * a + 2, a3 + 2 * a2 + 2 * a + 1, 2),
        (a3 + 2 * a2 + 2 * a + 2, 2 * a3 + 3 * a2 + 3 * a + 3, 0),
        (2 * a3 + 3 * a2 + 3 * a + 4, n, 1),
    ]
    coloring = _paint(n, 3, bands, Params(a, a, 3))
    return _certify("Thm3.2", a, coloring)


def four_coloring_bands(a: int) -> list[tuple[int, int, int]]:
    """Proposed band layout for the 4-coloring of [1, 7a^4+...+15].

    Bottom bands as in the 3-coloring plus a fourth geometric band for
    color 3 ending at a^4+2a^3+2a^2+2a+1; the remainder is split
    between colors 0, 1, 2 with cut points chosen so that triples
    leaving one top slice land beyond it.
    """
    n = four_coloring_length(a)
    a2, a3, a4 = a * a, a**3, a**4
    t = a3 + 2 * a2 + 2 * a + 1  # color-2 band end
    u = a4 + 2 * a3 + 2 * a2 + 2 * a + 1  # color-3 band end
    p = 2 * a4 + 4 * a3 + 3 * a2 + 3 * a + 3  # top color-0 slice end
    q = 4 * a4 + 7 * a3 + 4 * a2 + 5 * a + 7  # top color-1 slice end
    return [
        (1, a + 1, 0),
        (a + 2, a2 + 2 * a + 1, 1),
        (a2 + 2 * a + 2, t, 2),
        (t + 1, u, 3),
        (u + 1, p, 0),
        (p + 1, q, 1),
        (q + 1, n, 2),
    ]


def construct_4col(
    a: int, search_budget: solver.Budget | None = None
) -> ConstructionResult:
    """4-coloring of [1, 7a^4+12a^3+6a^2+9a+15], a >= 2.

    Tries the proposed band pattern first and certifies it mechanically.
    If the pattern fails, falls back to a budgeted solver search for a
    valid 4-coloring of the same length; `source` records which path
    produced the witness.  Raises LookupError when both fail within
    budget, so a shortfall is never silent.
    """
    if a < 2:
        raise ValueError(f"need a >= 2, got a={a}")
    n = four_coloring_length(a)
    params = Params(a, a, 4)
    coloring = _paint(n, 4, four_coloring_bands(a), params)
    result = _certify("Thm3.3", a, coloring)
    if result.certified:
        return result
    budget = search_budget or solver.Budget(max_seconds=300)
    found = solver.exists_valid(params, n, budget)
    if found.status == "yes":
        return ConstructionResult("Thm3.3", a, n, found.witness, True, None, "search")
    raise LookupError(
        f"pattern not valid (counterexample {result.offending.as_tuple()}) and "
        f"search returned {found.status} for a={a}, n={n}"
    )
