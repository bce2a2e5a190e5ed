"""Exact enumeration of rooted maps and hypermaps by genus.

After the rationalizing substitutions s = t(1-2t) (hypermaps) and
s = t(1-3t) (maps), the genus-g generating functions are rational with
integer numerator polynomials; this package computes them exactly,
extracts the integer count tables, and cross-validates everything
against an independent coefficient recursion and a brute-force
permutation oracle.
"""

from .algebra import FactoredRat, PFDecomp, Poly, partial_fractions, pf_integrate
from .counts import CountTable, counts_by_recursion, counts_from_solution, revert
from .engine import (
    HYPERMAP,
    MAP,
    GenusSolution,
    GenusTable,
    ModelSpec,
    base_case,
    leading_coefficient,
    solve_genus,
    solve_table,
)
from .oracle import OracleResult, count_rooted_hypermaps, count_rooted_maps

__all__ = [
    "FactoredRat", "PFDecomp", "Poly", "partial_fractions", "pf_integrate",
    "CountTable", "counts_by_recursion", "counts_from_solution", "revert",
    "HYPERMAP", "MAP", "GenusSolution", "GenusTable", "ModelSpec",
    "base_case", "leading_coefficient", "solve_genus", "solve_table",
    "OracleResult", "count_rooted_hypermaps", "count_rooted_maps",
]

__version__ = "0.1.0"
