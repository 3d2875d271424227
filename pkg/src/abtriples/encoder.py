"""CNF export of the coloring-existence problem, plus witness decoding.

The generated formula is satisfiable exactly when a valid r-coloring of
[1, n] exists.  For r = 2 one variable per integer (true = color 1)
and two clauses per triple (not all color 1, not all color 0).  For
r >= 3, variables v(i,c) numbered (i-1)*r + c + 1 with one at-least-one
clause and pairwise at-most-one clauses per integer, and one
all-different-from-c clause per triple and color.  A unit clause always
pins integer 1 to color 0.  Documents serialize to DIMACS text; the
decoder reads satisfying assignments back into colorings and a small
parser consumes the usual "s SATISFIABLE / v ..." solver output.

No solver is bundled; documents are written for external tools.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coloring, Params, iter_triples


@dataclass(frozen=True)
class CnfDocument:
    num_vars: int
    clauses: list[list[int]]
    comments: list[str]

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")


def var_index(params: Params, i: int, c: int) -> int:
    """DIMACS variable for integer i having color c (r >= 3 numbering)."""
    return (i - 1) * params.r + c + 1


def encode(params: Params, n: int) -> CnfDocument:
    """CNF whose models are the valid r-colorings of [1, n] with color(1) = 0."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    r = params.r
    if r < 2:
        raise ValueError("CNF encoding needs r >= 2")
    comments = [
        f"abtriple a={params.a} b={params.b} r={params.r} n={n}",
    ]
    clauses: list[list[int]] = []
    if r == 2:
        comments.append("vars: v(i) = i, true means color 1")
        clauses.append([-1])
        for t in iter_triples(params, n):
            clauses.append([-t.x, -t.y, -t.z])
            clauses.append([t.x, t.y, t.z])
        return CnfDocument(n, clauses, comments)

    comments.append(f"vars: v(i,c) = (i-1)*{r} + c + 1, true means color(i) = c")
    clauses.append([var_index(params, 1, 0)])
    for i in range(1, n + 1):
        clauses.append([var_index(params, i, c) for c in range(r)])
        for c1 in range(r):
            for c2 in range(c1 + 1, r):
                clauses.append([-var_index(params, i, c1), -var_index(params, i, c2)])
    for t in iter_triples(params, n):
        for c in range(r):
            clauses.append(
                [
                    -var_index(params, t.x, c),
                    -var_index(params, t.y, c),
                    -var_index(params, t.z, c),
                ]
            )
    return CnfDocument(n * r, clauses, comments)


def decode(params: Params, n: int, assignment: list[bool]) -> Coloring:
    """Coloring read off a variable assignment of encode(params, n).

    assignment[v-1] is the truth value of DIMACS variable v and must
    cover every variable.  For r >= 3 each integer must have exactly
    one true color variable.
    """
    r = params.r
    expected = n if r == 2 else n * r
    if r < 2:
        raise ValueError("CNF encoding needs r >= 2")
    if len(assignment) < expected:
        raise ValueError(f"assignment covers {len(assignment)} vars, need {expected}")
    if r == 2:
        colors = tuple(1 if assignment[i - 1] else 0 for i in range(1, n + 1))
        return Coloring(params, n, colors)
    colors = []
    for i in range(1, n + 1):
        true_cs = [c for c in range(r) if assignment[var_index(params, i, c) - 1]]
        if len(true_cs) != 1:
            raise ValueError(
                f"integer {i} has {len(true_cs)} true color variables, expected 1"
            )
        colors.append(true_cs[0])
    return Coloring(params, n, tuple(colors))


def to_dimacs(doc: CnfDocument) -> str:
    """DIMACS CNF text: comments, header, one clause per line, 0-terminated."""
    lines = [f"c {text}" for text in doc.comments]
    lines.append(f"p cnf {doc.num_vars} {len(doc.clauses)}")
    for clause in doc.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def write_dimacs(doc: CnfDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_dimacs(doc))


def parse_solver_output(text: str, num_vars: int) -> list[bool] | None:
    """Assignment from conventional SAT-solver output, or None when UNSAT.

    Reads the "s SATISFIABLE" / "s UNSATISFIABLE" status line and "v"
    value lines of space-separated literals terminated by 0.
    """
    status = None
    lits: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word == "SATISFIABLE":
                status = True
            elif word == "UNSATISFIABLE":
                status = False
        elif line.startswith("v ") or line == "v":
            for tok in line[1:].split():
                lit = int(tok)
                if lit != 0:
                    lits.append(lit)
    if status is None:
        raise ValueError("no 's' status line in solver output")
    if status is False:
        return None
    assignment = [False] * num_vars
    for lit in lits:
        v = abs(lit)
        if v > num_vars:
            raise ValueError(f"literal {lit} exceeds declared variable count {num_vars}")
        assignment[v - 1] = lit > 0
    return assignment
