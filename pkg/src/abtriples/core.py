"""Instance parameters, triples, colorings, and validity checking.

An (a,b)-triple is a set {x, a*x+d, b*x+2*d} with integers x >= 1 and
d >= 1.  For a = b = 1 these are exactly the 3-term arithmetic
progressions.  A coloring of [1,n] is valid when no triple is
monochromatic.  Everything here is pure and immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

UNASSIGNED = None


@dataclass(frozen=True)
class Params:
    """Triple coefficients a <= b and the number of colors r."""

    a: int
    b: int
    r: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int) and isinstance(self.r, int)):
            raise TypeError("a, b, r must be integers")
        if not 1 <= self.a <= self.b:
            raise ValueError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")
        if self.r < 1:
            raise ValueError(f"need r >= 1, got r={self.r}")


@dataclass(frozen=True)
class Triple:
    """Ordered triple (x, y, z) with y = a*x + d and z = b*x + 2*d.

    d >= 1 forces x < y < z, so the three elements are always distinct.
    d is kept because (x, d) is the generating pair; the map
    (x, d) -> (x, y, z) is injective for fixed (a, b).
    """

    x: int
    y: int
    z: int
    d: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 0..r-1 to the integers 1..n."""

    params: Params
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got n={self.n}")
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        r = self.params.r
        for i, c in enumerate(self.colors):
            if not isinstance(c, int) or not 0 <= c < r:
                raise ValueError(f"color of {i + 1} is {c!r}, not in 0..{r - 1}")
        object.__setattr__(self, "colors", tuple(self.colors))

    def color_of(self, i: int) -> int:
        """Color of the integer i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise IndexError(f"{i} outside [1, {self.n}]")
        return self.colors[i - 1]

    def restrict(self, m: int) -> "Coloring":
        """Restriction to [1, m], m <= n."""
        if not 1 <= m <= self.n:
            raise ValueError(f"need 1 <= m <= {self.n}, got {m}")
        return Coloring(self.params, m, self.colors[:m])


@dataclass(frozen=True)
class PartialColoring:
    """Search-state coloring: entries are color indices or UNASSIGNED."""

    params: Params
    n: int
    colors: tuple[int | None, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got n={self.n}")
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(self.colors)}")
        r = self.params.r
        for i, c in enumerate(self.colors):
            if c is not UNASSIGNED and (not isinstance(c, int) or not 0 <= c < r):
                raise ValueError(f"entry for {i + 1} is {c!r}, not a color or UNASSIGNED")
        object.__setattr__(self, "colors", tuple(self.colors))

    @property
    def assigned_count(self) -> int:
        return sum(1 for c in self.colors if c is not UNASSIGNED)

    def complete(self) -> Coloring:
        if any(c is UNASSIGNED for c in self.colors):
            raise ValueError("coloring is not total")
        return Coloring(self.params, self.n, self.colors)  # type: ignore[arg-type]


def iter_triples(params: Params, n: int) -> Iterator[Triple]:
    """Yield every triple inside [1, n] in increasing (z, x) order."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    for z in range(1, n + 1):
        yield from triples_with_max(params, z)


def enumerate_triples(params: Params, n: int) -> list[Triple]:
    """All triples {x, a*x+d, b*x+2*d} contained in [1, n], sorted by (z, x)."""
    return list(iter_triples(params, n))


def triples_with_max(params: Params, z: int) -> list[Triple]:
    """Triples whose largest element is exactly z, sorted by x.

    Inverting z = b*x + 2*d: a triple exists for each x >= 1 with
    z - b*x even and >= 2.
    """
    if z < 1:
        raise ValueError(f"need z >= 1, got z={z}")
    a, b = params.a, params.b
    out = []
    # need b*x <= z - 2
    for x in range(1, (z - 2) // b + 1):
        rem = z - b * x
        if rem & 1:
            continue
        d = rem // 2
        out.append(Triple(x, a * x + d, z, d))
    return out


def mid_pairs(params: Params, y: int, n: int) -> list[tuple[int, int]]:
    """Pairs (x, z) such that (x, y, z) is a triple with z <= n.

    Solving y = a*x + d for d: every x with a*x < y gives d = y - a*x
    and z = 2*y + (b - 2*a)*x.  Used by the solver to index constraints
    by their middle element.
    """
    a, b = params.a, params.b
    k = b - 2 * a
    out = []
    for x in range(1, (y - 1) // a + 1):
        z = 2 * y + k * x
        if z <= n:
            out.append((x, z))
    return out


def find_mono_triple(coloring: Coloring) -> Triple | None:
    """First monochromatic triple in (z, x) order, or None."""
    cols = coloring.colors
    for t in iter_triples(coloring.params, coloring.n):
        c = cols[t.x - 1]
        if cols[t.y - 1] == c and cols[t.z - 1] == c:
            return t
    return None


def is_valid(coloring: Coloring) -> bool:
    """True when the coloring contains no monochromatic triple."""
    return find_mono_triple(coloring) is None


def witness_to_json(coloring: Coloring, label: str | None = None) -> str:
    """Serialize a coloring as a witness JSON document."""
    doc: dict = {
        "a": coloring.params.a,
        "b": coloring.params.b,
        "r": coloring.params.r,
        "n": coloring.n,
        "colors": list(coloring.colors),
    }
    if label is not None:
        doc["label"] = label
    return json.dumps(doc, sort_keys=True)


def witness_from_json(text: str) -> Coloring:
    """Parse a witness JSON document; raises ValueError on malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ValueError("witness document must be a JSON object")
    try:
        a, b, r, n = (int(doc[k]) for k in ("a", "b", "r", "n"))
        colors = doc["colors"]
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"missing or malformed witness field: {e}") from e
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise ValueError('"colors" must be a list of integers')
    return Coloring(Params(a, b, r), n, tuple(colors))


def write_witness(path, coloring: Coloring, label: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(witness_to_json(coloring, label))
        f.write("\n")


def read_witness(path) -> Coloring:
    with open(path, "r", encoding="utf-8") as f:
        return witness_from_json(f.read())
