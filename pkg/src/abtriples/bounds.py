"""Closed-form bounds on the 2-color threshold T(a,b) and related checks.

T(a,b) is finite exactly when b != 2a.  Four bound families are
implemented: a quartic lower/upper pair (thm1), a quadratic upper bound
in four parity cases (thm2), and three special-case lower bounds coming
from explicit colorings ("T1b", "T-2a-1", "Thm3.1").  best_known
aggregates them.  lemma1_check machine-checks a two-part color-forcing
implication against concrete valid colorings; it treats the implication
statement itself as the contract and reports whether the hypotheses are
met and, if so, whether the conclusion holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .core import Coloring, is_valid


def existence(a: int, b: int) -> bool:
    """True iff the 2-color threshold T(a,b) is finite, i.e. b != 2a."""
    _check_pair(a, b)
    return b != 2 * a


def thm1_bounds(a: int, b: int) -> tuple[int, int] | None:
    """Quartic-era lower/upper bound pair; None when b = 2a."""
    _check_pair(a, b)
    if b == 2 * a:
        return None
    if b > 2 * a:
        lower = 2 * b * b + 5 * b - 2 * a + 4
        upper = 4 * a * (b**3 + b**2 - 3 * b - 3) + 2 * b**3 + 4 * b**2 + 6 * b
    else:
        lower = 3 * b * b - 2 * a * b + 5 * b - 2 * a + 4
        upper = 4 * a * (b**3 + 2 * b**2 + 2 * b) - 4 * b**2
    return (lower, upper)


def thm2_upper(a: int, b: int) -> int | None:
    """Quadratic upper bound, split on the parity of b; None unless a < b and b != 2a."""
    _check_pair(a, b)
    if a == b or b == 2 * a:
        return None
    if b > 2 * a:
        if b % 2 == 0:
            return 7 * b * b - 6 * a * b + 13 * b - 10 * a
        return 14 * b * b - 12 * a * b + 26 * b - 20 * a
    if b % 2 == 0:
        return 3 * b * b + 2 * a * b + 16 * a
    return 6 * b * b + 4 * a * b + 8 * b + 16 * a


def special_lowers(a: int, b: int) -> list[tuple[str, int]]:
    """Lower bounds from explicit constructions, as (label, value) pairs."""
    _check_pair(a, b)
    out = []
    if a == 1 and b >= 3:
        out.append(("T1b", 2 * b * b + 5 * b + 6))
    if b == 2 * a - 1 and a >= 2:
        out.append(("T-2a-1", 16 * a * a - 12 * a + 6))
    if a == b and a >= 4:
        out.append(("Thm3.1", a * a + 3 * a + 8))
    return out


@dataclass(frozen=True)
class BoundReport:
    """Every applicable bound for one pair, plus the best aggregates.

    best_lower is the max of the applicable lower bounds (0 when none
    applies); best_upper is the min of the applicable upper bounds and
    is None exactly when T(a,b) is infinite.
    """

    a: int
    b: int
    exists: bool
    thm1_lower: int | None
    thm1_upper: int | None
    thm2_upper: int | None
    special_lowers: list[tuple[str, int]] = field(default_factory=list)
    best_lower: int = 0
    best_upper: int | None = None

    def to_json(self) -> str:
        doc = {"a": self.a, "b": self.b, "exists": self.exists}
        for key in ("thm1_lower", "thm1_upper", "thm2_upper"):
            val = getattr(self, key)
            if val is not None:
                doc[key] = val
        doc["special_lowers"] = [[label, value] for label, value in self.special_lowers]
        doc["best_lower"] = self.best_lower
        if self.best_upper is not None:
            doc["best_upper"] = self.best_upper
        return json.dumps(doc, sort_keys=True)


def best_known(a: int, b: int) -> BoundReport:
    """Aggregate of every bound formula that applies to (a, b)."""
    _check_pair(a, b)
    exists = existence(a, b)
    t1 = thm1_bounds(a, b)
    t2 = thm2_upper(a, b)
    specials = special_lowers(a, b)
    lowers = [val for _, val in specials]
    uppers = []
    if t1 is not None:
        lowers.append(t1[0])
        uppers.append(t1[1])
    if t2 is not None:
        uppers.append(t2)
    return BoundReport(
        a=a,
        b=b,
        exists=exists,
        thm1_lower=t1[0] if t1 else None,
        thm1_upper=t1[1] if t1 else None,
        thm2_upper=t2,
        special_lowers=specials,
        best_lower=max(lowers) if lowers else 0,
        best_upper=min(uppers) if uppers else None,
    )


def best_known_lower(a: int, b: int) -> int:
    return best_known(a, b).best_lower


def best_known_upper(a: int, b: int) -> int | None:
    return best_known(a, b).best_upper


class Lemma1Outcome(Enum):
    CONCLUSION_HOLDS = "conclusion_holds"
    HYPOTHESES_FAIL = "hypotheses_fail"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Lemma1Instance:
    """One candidate application of the color-forcing implication.

    part "A" forces the color of target - i*(b-2a)/2 from a target x
    with the color of k; part "B" forces the color of target - i*(b-2a)
    from a target y with the color of k+i.  Negative i is allowed when
    k > -i; hypothesis (i) then takes the extended (max-guarded) form.
    """

    a: int
    b: int
    k: int
    i: int
    M: int
    target: int
    part: str

    def __post_init__(self):
        _check_pair(self.a, self.b)
        if self.part not in ("A", "B"):
            raise ValueError(f"part must be 'A' or 'B', got {self.part!r}")
        if self.k < 1 or self.M < 1 or self.target < 1:
            raise ValueError("k, M and target must be positive")
        if self.i == 0:
            raise ValueError("i must be nonzero")
        if self.i < 0 and self.k <= -self.i:
            raise ValueError(f"negative i requires k > -i, got k={self.k}, i={self.i}")


def lemma1_check(
    instance: Lemma1Instance, coloring: Coloring, *, prechecked_valid: bool = False
) -> Lemma1Outcome:
    """Evaluate one implication instance against a valid 2-coloring.

    The coloring must have 2 colors, cover [1, M], be valid on [1, M],
    and color k and k+i differently; anything else is rejected.  The
    hypotheses are evaluated literally; if any fails the outcome is
    HYPOTHESES_FAIL.  Otherwise the forced-color equality is tested and
    a failure is reported as VIOLATED.

    prechecked_valid=True skips the validity scan; callers sweeping many
    instances over one coloring should validate it once themselves.
    """
    a, b, k, i, M = instance.a, instance.b, instance.k, instance.i, instance.M
    if coloring.params.r != 2:
        raise ValueError("implication check requires a 2-coloring")
    if coloring.n < M:
        raise ValueError(f"coloring covers [1,{coloring.n}] but M={M}")
    if coloring.params.a != a or coloring.params.b != b:
        raise ValueError("coloring parameters disagree with the instance")
    if not prechecked_valid and not is_valid(coloring.restrict(M)):
        raise ValueError("coloring is not valid on [1, M]")
    chi = coloring.color_of
    if k + i < 1 or k > M or k + i > M:
        raise ValueError("k and k+i must lie in [1, M]")
    if chi(k) == chi(k + i):
        raise ValueError("premise requires the colors of k and k+i to differ")

    if instance.part == "A":
        x = instance.target
        # (i), extended to negative i; 2*x > 2*a*k + i*b avoids the half-integer
        if i > 0:
            hyp_i = 2 * x > 2 * a * k + i * b
        else:
            hyp_i = x > a * k and 2 * x > 2 * a * k + i * b
        hyp_ii = M >= max(x, 2 * (x - a * k) + b * k)
        hyp_iii = (i * (b - 2 * a)) % 2 == 0
        hyp_iv = x <= M and chi(x) == chi(k)
        if not (hyp_i and hyp_ii and hyp_iii and hyp_iv):
            return Lemma1Outcome.HYPOTHESES_FAIL
        forced = x - (i * (b - 2 * a)) // 2
        return (
            Lemma1Outcome.CONCLUSION_HOLDS
            if chi(forced) == chi(k)
            else Lemma1Outcome.VIOLATED
        )

    y = instance.target
    if i > 0:
        hyp_i = y > b * (k + i)
    else:
        hyp_i = y > max(b * (k + i), b * (k + i) - 2 * a * i)
    hyp_ii = M >= max(y, y - i * (b - 2 * a))
    hyp_iii = (y - b * (k + i)) % 2 == 0
    hyp_iv = y <= M and chi(y) == chi(k + i)
    if not (hyp_i and hyp_ii and hyp_iii and hyp_iv):
        return Lemma1Outcome.HYPOTHESES_FAIL
    forced = y - i * (b - 2 * a)
    return (
        Lemma1Outcome.CONCLUSION_HOLDS
        if chi(forced) == chi(k + i)
        else Lemma1Outcome.VIOLATED
    )


def _check_pair(a: int, b: int) -> None:
    if not (isinstance(a, int) and isinstance(b, int)):
        raise TypeError("a and b must be integers")
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
