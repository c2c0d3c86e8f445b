"""d_J^k omega sweeps over the almost complex structures of the type-II rows."""
from __future__ import annotations

from ..catalog import build_model
from ..catalog.params import ModelParams
from ..geometry import dJ, omega_form
from ..scalar import is_zero
from .grids import type2_grid
from .report import ClaimReport


def dJ3_locus(P: ModelParams) -> bool:
    """Whether d_J^3 omega is predicted to vanish at this q."""
    q = P.q
    if P.case == "A1.4":
        # the poles q = +-i and the equator q _|_ i
        return (is_zero(q.y) and is_zero(q.z)) or is_zero(q.x)
    if P.case == "A3.5":
        if is_zero(P.p.y):  # p = i: only the poles
            return is_zero(q.y) and is_zero(q.z)
        return is_zero(q.y)  # p = j: q = a i + b k with a^2 - b^2 = 1
    raise ValueError(f"{P.case} is not a type-II row")


def dJ_powers(model, top: int = 4) -> list:
    powers = [omega_form(model)]
    for _ in range(top):
        powers.append(dJ(model, powers[-1]))
    return powers


def sweep_type2(case: str, grid: list[ModelParams] | None = None) -> ClaimReport:
    grid = type2_grid(case) if grid is None else grid
    report = ClaimReport("type2", case)
    on_locus = 0
    for P in grid:
        model = build_model(P)
        w = dJ_powers(model)
        zero = [f.is_zero(model.tol) for f in w]
        predicted = dJ3_locus(P)
        on_locus += predicted
        pt = report.add(P.to_json())
        pt.check("dJ2_nonzero", not zero[2])
        pt.check("dJ3_locus", zero[3] == predicted, {"dJ3_zero": zero[3], "predicted": predicted})
        pt.check("dJ4_zero", zero[4])
    report.extra["on_locus"] = on_locus
    report.extra["off_locus"] = len(grid) - on_locus
    return report.sort()
