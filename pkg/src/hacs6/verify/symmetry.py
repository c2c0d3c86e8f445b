"""Dimension of the symmetry algebra of an invariant almost complex structure.

For m a Lie subalgebra (the group case) with non-degenerate Nijenhuis tensor,
infinitesimal symmetries are m itself plus the J-linear derivations of m.
"""
from __future__ import annotations

from ..catalog import build_model
from ..catalog.model import Model
from ..geometry import degeneracy_class, nijenhuis
from ..lie import LieAlg, derivations
from .grids import default_grid
from .report import ClaimReport

EXPECTED_DER = 3


class HypothesisError(ValueError):
    """The model does not satisfy the hypothesis of the symmetry count."""


def complex_derivations(model: Model) -> list:
    return derivations(LieAlg(model.cm), commute_with=model.J, tol=model.tol)


def symmetry_dimension(model: Model) -> int:
    if not model.m_is_subalgebra():
        raise HypothesisError(f"{model.case}: m is not a subalgebra ([m,m] has an h-component)")
    cls = degeneracy_class(nijenhuis(model))
    if cls != "NDG":
        raise HypothesisError(f"{model.case}: Nijenhuis tensor is not non-degenerate (class {cls})")
    return model.nm + len(complex_derivations(model))


SYMMETRY_ROWS = ("A1.1", "A2.1", "A2.2", "A2.3", "A2.4", "A3.1", "A3.2",
                 "A4.1", "A4.2", "A4.3", "A4.4")


def verify_symmetry(rows=SYMMETRY_ROWS, limit: int | None = None) -> list[ClaimReport]:
    """Check the count at every NDG point of the sampled grids."""
    out = []
    for case in rows:
        report = ClaimReport("symmetry", case)
        for P in default_grid(case):
            model = build_model(P)
            try:
                dim = symmetry_dimension(model)
            except HypothesisError:
                continue
            pt = report.add(P.to_json())
            pt.check("der_dim", dim - model.nm == EXPECTED_DER, {"got": dim - model.nm})
            if limit and len(report.points) >= limit:
                break
        report.extra["ndg_points"] = len(report.points)
        out.append(report.sort())
    return out
