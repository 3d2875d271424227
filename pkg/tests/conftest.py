"""Shared independent oracles for the test suite.

These deliberately avoid the package's enumeration and search code
paths: triples are derived from the alternative characterization
z = 2y + (b-2a)x with y > ax, and CNF satisfiability is decided by a
self-contained DPLL procedure.
"""

from __future__ import annotations


def rado_scan_triples(a: int, b: int, n: int) -> set[tuple[int, int, int]]:
    """All triples inside [1, n], from the linear-equation form."""
    out = set()
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if y <= a * x:
                continue
            z = 2 * y + (b - 2 * a) * x
            if 1 <= z <= n:
                out.add((x, y, z))
    return out


def has_mono_triple_scan(a: int, b: int, colors: tuple[int, ...]) -> bool:
    """Monochromatic-triple test by direct (x, d) expansion."""
    n = len(colors)
    for x in range(1, n + 1):
        for d in range(1, (n - b * x) // 2 + 1):
            y = a * x + d
            z = b * x + 2 * d
            if colors[x - 1] == colors[y - 1] == colors[z - 1]:
                return True
    return False


def dpll_satisfiable(num_vars: int, clauses: list[list[int]]) -> list[bool] | None:
    """Self-contained DPLL; returns a satisfying assignment or None.

    Splitting picks the smallest-index unassigned variable, trying
    False first.  Intended for the small formulas the encoder tests
    generate, not as a general-purpose solver.
    """
    assign: dict[int, bool] = {}

    def propagate(cls):
        cls = [list(c) for c in cls]
        while True:
            unit = None
            new_cls = []
            for c in cls:
                reduced = []
                satisfied = False
                for lit in c:
                    v = abs(lit)
                    if v in assign:
                        if assign[v] == (lit > 0):
                            satisfied = True
                            break
                    else:
                        reduced.append(lit)
                if satisfied:
                    continue
                if not reduced:
                    return None  # conflict
                if len(reduced) == 1 and unit is None:
                    unit = reduced[0]
                new_cls.append(reduced)
            if unit is None:
                return new_cls
            assign[abs(unit)] = unit > 0
            cls = new_cls

    def search(cls):
        cls = propagate(cls)
        if cls is None:
            return False
        if not cls:
            return True
        var = min(abs(lit) for c in cls for lit in c)
        saved = dict(assign)
        for value in (False, True):
            assign.clear()
            assign.update(saved)
            assign[var] = value
            if search(cls):
                return True
        assign.clear()
        assign.update(saved)
        return False

    if search(clauses):
        return [assign.get(v, False) for v in range(1, num_vars + 1)]
    return None
