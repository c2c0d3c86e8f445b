"""Invariant metrics and 2-forms for the eight isotropy types.

Each type is represented by one catalog model carrying that isotropy module;
only the h-action and J are used, never the bracket on m.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .. import linalg
from ..catalog import build_model
from ..catalog.params import params_from_dict
from ..lie import has_nondegenerate_member, invariant_tensors
from .report import ClaimReport


@dataclass(frozen=True)
class TensorCase:
    number: int
    isotropy: str
    module: str
    source: dict | str  # catalog parameters or a G2 form name
    metric_dim: int  # dimension of the compatible metric family (0 if none is nondegenerate)
    two_form_dim: int  # all invariant 2-forms on m
    v_two_form_dim: int | None  # invariant 2-forms on the V summand, when m = V + C
    signatures: frozenset  # realized signatures, up to an overall sign


def _sig(p, q):
    return (max(p, q), min(p, q))


CASES = (
    TensorCase(1, "su(2)", "V+C", {"case": "A1.1", "alpha": 1, "r": 0, "eps": 1, "q": "i"},
               2, 4, 3, frozenset({_sig(6, 0), _sig(4, 2)})),
    TensorCase(2, "su(2)", "ad^C", {"case": "A2.1", "r": 0, "t": 1}, 1, 1, None, frozenset({_sig(6, 0)})),
    TensorCase(3, "su(1,1)", "V+C", {"case": "A3.1", "alpha": 1, "r": 0, "eps": 1, "q": "i", "p": "i"},
               2, 4, 3, frozenset({_sig(4, 2)})),
    TensorCase(4, "su(1,1)", "ad^C", {"case": "A4.1", "r": 0, "t": 1}, 1, 1, None, frozenset({_sig(4, 2)})),
    TensorCase(5, "sl2(C)", "V+C", {"case": "A5.1", "alpha": 0, "beta": 0, "gamma": 0, "eps": 0},
               0, 3, 2, frozenset()),
    TensorCase(6, "sl2(C)", "ad", {"case": "A6"}, 0, 0, None, frozenset()),
    TensorCase(7, "su(3)", "V", "compact", 1, 1, None, frozenset({_sig(6, 0)})),
    TensorCase(8, "su(2,1)", "V", "split", 1, 1, None, frozenset({_sig(4, 2)})),
)


def case_model(case: TensorCase):
    if isinstance(case.source, str):
        return build_model(params_from_dict({"case": "G2s" if case.source == "split" else "G2c"}))
    return build_model(params_from_dict(case.source))


def _block_rank(forms, k: int) -> int:
    if not forms:
        return 0
    rows = np.array([f[:k, :k].reshape(-1) for f in forms], dtype=forms[0].dtype)
    return linalg.rank(rows)


def realized_signatures(metrics) -> set:
    """Signatures of the nondegenerate combinations with coefficients in {-1, 1, 2}."""
    out = set()
    if not metrics:
        return out
    for coeffs in product((-1, 1, 2), repeat=len(metrics)):
        G = sum(c * m for c, m in zip(coeffs, metrics))
        p, q, z = linalg.sym_signature(G)
        if z == 0:
            out.add(_sig(p, q))
    return out


def tensor_summary(model) -> dict:
    rep, J = model.rep, model.J
    sym = invariant_tensors(rep, "sym2_J", J)
    alt = invariant_tensors(rep, "alt2")
    alt_j = invariant_tensors(rep, "alt2_J", J)
    nondeg = has_nondegenerate_member(sym)
    return {
        "compatible_sym2": len(sym),
        "compatible_alt2": len(alt_j),
        "metric_dim": len(sym) if nondeg else 0,
        "symplectic_dim": len(alt_j) if has_nondegenerate_member(alt_j) else 0,
        "two_form_dim": len(alt),
        "v_two_form_dim": _block_rank(alt, 4),
        "signatures": sorted(realized_signatures(sym)),
    }


def verify_tensor_cases(cases=CASES) -> ClaimReport:
    report = ClaimReport("invariant-tensors", "cases 1-8")
    for case in cases:
        model = case_model(case)
        s = tensor_summary(model)
        pt = report.add({"case": case.number, "isotropy": case.isotropy, "module": case.module})
        pt.check("metric_dim", s["metric_dim"] == case.metric_dim, {"got": s["metric_dim"]})
        # metrics and compatible forms correspond via omega = g(J., .)
        pt.check("metric_form_bijection", s["metric_dim"] == s["symplectic_dim"],
                 {"metrics": s["metric_dim"], "forms": s["symplectic_dim"]})
        pt.check("two_form_dim", s["two_form_dim"] == case.two_form_dim, {"got": s["two_form_dim"]})
        if case.v_two_form_dim is not None:
            pt.check("v_two_form_dim", s["v_two_form_dim"] == case.v_two_form_dim,
                     {"got": s["v_two_form_dim"]})
        pt.check("signatures", set(s["signatures"]) == set(case.signatures),
                 {"got": [list(x) for x in s["signatures"]]})
    return report
