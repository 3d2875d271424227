"""Exact solver and verification toolkit for (a,b)-triples.

An (a,b)-triple is a set {x, a*x+d, b*x+2*d} with x, d >= 1; T(a,b;r)
is the least n such that every r-coloring of [1, n] contains a
monochromatic triple.  The package computes exact thresholds by
backtracking search, evaluates closed-form bounds, certifies explicit
lower-bound colorings, and exports instances as DIMACS CNF.
"""

from .core import (
    Coloring,
    Params,
    PartialColoring,
    Triple,
    enumerate_triples,
    find_mono_triple,
    is_valid,
    triples_with_max,
    witness_from_json,
    witness_to_json,
)
from .solver import (
    Budget,
    ExistsResult,
    SolveOutcome,
    brute_force_exists,
    compute_T,
    dor_probe,
    exists_valid,
)
from .bounds import (
    BoundReport,
    Lemma1Instance,
    Lemma1Outcome,
    best_known,
    existence,
    lemma1_check,
    special_lowers,
    thm1_bounds,
    thm2_upper,
)
from .constructions import (
    ConstructionResult,
    construct_2col,
    construct_3col,
    construct_4col,
)
from .encoder import CnfDocument, decode, encode, parse_solver_output, to_dimacs

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BoundReport",
    "CnfDocument",
    "Coloring",
    "ConstructionResult",
    "ExistsResult",
    "Lemma1Instance",
    "Lemma1Outcome",
    "Params",
    "PartialColoring",
    "SolveOutcome",
    "Triple",
    "best_known",
    "brute_force_exists",
    "compute_T",
    "construct_2col",
    "construct_3col",
    "construct_4col",
    "decode",
    "dor_probe",
    "encode",
    "enumerate_triples",
    "existence",
    "exists_valid",
    "find_mono_triple",
    "is_valid",
    "lemma1_check",
    "parse_solver_output",
    "special_lowers",
    "thm1_bounds",
    "thm2_upper",
    "to_dimacs",
    "triples_with_max",
    "witness_from_json",
    "witness_to_json",
]
