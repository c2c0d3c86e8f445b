"""Claim suites over the catalog: table rows, theorems, sweeps and the A1 solver."""
from __future__ import annotations

from ..catalog import ALL_CASES
from .a1solver import A1Ansatz, solve_a1_family
from .gh import gh_realization_sweep
from .grids import default_grid, type2_grid
from .report import ClaimReport, PointResult
from .skt import verify_skt_theorem
from .symmetry import HypothesisError, symmetry_dimension, verify_symmetry
from .table import verify_table_row
from .tensors import verify_tensor_cases
from .theorems import verify_g2, verify_kahler, verify_snk
from .type2 import sweep_type2

SUITES = ("table", "kahler", "snk", "skt", "type2", "gh", "symmetry", "tensors", "g2", "a1")


def run_suite(name: str, literal: bool = False, cases=None) -> list[ClaimReport]:
    """Run one suite; ``literal`` adds the printed claims that are known not to hold."""
    if name == "table":
        rows = cases or ALL_CASES
        return [verify_table_row(c, default_grid(c), literal=literal) for c in rows]
    if name == "kahler":
        return verify_kahler(literal)
    if name == "snk":
        return [verify_snk()]
    if name == "skt":
        return verify_skt_theorem()
    if name == "type2":
        return [sweep_type2(c) for c in ("A1.4", "A3.5")]
    if name == "gh":
        return list(gh_realization_sweep(literal=literal).values())
    if name == "symmetry":
        return verify_symmetry()
    if name == "tensors":
        return [verify_tensor_cases()]
    if name == "g2":
        return [verify_g2(literal_dJ3=literal)]
    if name == "a1":
        return [solve_a1_family()]
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")


def run_all(literal: bool = False, suites=SUITES) -> list[ClaimReport]:
    out = []
    for name in suites:
        out.extend(run_suite(name, literal))
    return out


__all__ = [
    "A1Ansatz", "ClaimReport", "HypothesisError", "PointResult", "SUITES", "default_grid",
    "gh_realization_sweep", "run_all", "run_suite", "solve_a1_family", "sweep_type2",
    "symmetry_dimension", "type2_grid", "verify_g2", "verify_kahler", "verify_skt_theorem",
    "verify_snk", "verify_symmetry", "verify_table_row", "verify_tensor_cases",
]
