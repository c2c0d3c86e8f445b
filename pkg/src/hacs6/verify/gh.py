"""Which Gray-Hervella classes the catalog realizes, per table row.

For the V+C rows the compatible forms are ``b = s q``; the scale ``s`` matters
for the V-bracket rows (A1.1, A1.4), where individual components vanish at
special values of ``s``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..catalog import build_model, params_from_dict, validate_params
from ..catalog.params import ModelParams, quat_algebra
from ..geometry import degeneracy_class, gh_class, nijenhuis
from ..quaternion import parse_quat
from .grids import default_grid
from .report import ClaimReport

# classes printed for each row (tuples of component indices; () is Kahler)
LISTED = {
    "A1.1": [(), (3, 4), (1, 2, 3), (1, 2, 3, 4)],
    "A1.2": [(3,), (1, 2), (3, 4), (1, 2, 3), (1, 2, 3, 4)],
    "A1.3": [(), (3, 4), (1, 2, 3), (1, 2, 3, 4)],
    "A1.4": [(4,), (1, 2), (1, 3), (2, 3), (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4)],
    "A2.1": [(1,), (1, 3)],
    "A2.2": [(3,), (1, 3)],
    "A2.3": [(1, 3)],
    "A2.4": [(1, 3)],
}
NEVER = [(2,), (1, 4), (2, 4)]

# Integrable points of these rows have d omega = theta ^ omega with d theta = 0,
# so the Hermitian non-Kahler class there is the pure Lee-form class (4,).
LCK_ROWS = ("A1.1", "A1.3")

SWEEP_ROWS = ("A1.1", "A1.2", "A1.3", "A1.4", "A2.1", "A2.2", "A2.3", "A2.4",
              "A3.1", "A3.2", "A3.3", "A3.4", "A3.5", "A4.1", "A4.2", "A4.3", "A4.4")


def scaled(case: str, base: dict, s) -> ModelParams:
    """Parameters with ``b = s q``."""
    b = parse_quat(base["q"], quat_algebra(case), True) * Fraction(s)
    return params_from_dict({"case": case, "params": {**base, "b": b}})


def gh_grid(case: str) -> list[ModelParams]:
    rows = []
    q3 = "1/3i+2/3j+2/3k"
    if case == "A1.1":
        for r, e, q, s in product(("0", "1"), ("0", "1"), ("i", "j", q3), ("1", "-1", "2")):
            rows.append(scaled(case, dict(alpha="1", r=r, eps=e, q=q), s))
    elif case == "A1.2":
        ps = ("0", "i", "k", "-k", "j+k", "k-j", "-j-k", "-2i-2k", "-2i-j-2k")
        for q, p in product(("j", "3/5i+4/5k", "i"), ps):
            rows.append(scaled(case, dict(q=q, p=p), "1"))
    elif case == "A1.3":
        for (e, a), beta, r, q in product((("0", "0"), ("0", "1"), ("1", "0")), ("0", "1/2", "-1/2"),
                                          ("0", "1"), ("i", q3)):
            rows.append(scaled(case, dict(eps=e, alpha=a, beta=beta, r=r, q=q), "1"))
    elif case == "A1.4":
        for e, q, s in product(("-1", "1"), ("i", "j", q3), ("1", "1/6", "-1/6", "1/3", "-1/3")):
            rows.append(scaled(case, dict(eps=e, q=q), s))
    else:
        return default_grid(case)
    return [P for P in rows if not validate_params(P)]


def _key(P: ModelParams) -> dict:
    return P.to_json()["params"]


def expected_classes(case: str, literal: bool = True) -> list[tuple]:
    """Printed classes; the corrected reading replaces (3, 4) by (4,) on the lcK rows."""
    listed = LISTED.get(case, [])
    if literal or case not in LCK_ROWS:
        return listed
    return [(4,) if c == (3, 4) else c for c in listed]


def gh_realization_sweep(rows=SWEEP_ROWS, grids: dict | None = None,
                         literal: bool = True) -> dict[str, ClaimReport]:
    out = {}
    for case in rows:
        grid = (grids or {}).get(case) or gh_grid(case)
        report = ClaimReport("gh", case)
        realized: dict[tuple, dict] = {}
        for P in grid:
            model = build_model(P)
            if model.metric is None:
                continue
            cls = tuple(gh_class(model))
            realized.setdefault(cls, _key(P))
            pt = report.add(_key(P))
            pt.check("not_excluded", cls not in NEVER, {"class": list(cls)})
            if case in LCK_ROWS and degeneracy_class(nijenhuis(model)) == "ZERO":
                pt.check("integrable_is_lck", cls in ((), (4,)), {"class": list(cls)})
        for cls in expected_classes(case, literal):
            pt = report.add({"listed_class": list(cls)})
            pt.check("witness_found", cls in realized)
        listed = set(expected_classes(case, literal))
        report.extra = {
            "realized": {",".join(map(str, c)) or "K": w for c, w in sorted(realized.items())},
            "unlisted": sorted([list(c) for c in realized if listed and c not in listed]),
        }
        out[case] = report
    return out


def missing_witnesses(reports: dict[str, ClaimReport]) -> dict[str, list]:
    out = {}
    for case, rep in reports.items():
        miss = [p.params["listed_class"] for p in rep.points
                if "listed_class" in p.params and not p.passed]
        if miss:
            out[case] = miss
    return out
